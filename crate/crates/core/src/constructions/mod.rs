//! Derived rings: quotients, products, idealizations and localizations,
//! together with ring homomorphisms and their ideal correspondences.

pub mod module;

use std::fmt;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::expansion::Expansion;
use crate::ideal::Ideal;
use crate::ring::{ElemExpr, Element, FiniteKind, Ring, RingSpec, MAX_FINITE_SIZE};

pub use module::{Module, Submodule};

/// A ring homomorphism, validated on every pair of source elements.
#[derive(Clone)]
pub struct Homomorphism {
    source: Ring,
    target: Ring,
    map: MapKind,
}

#[derive(Clone)]
enum MapKind {
    Table(Arc<Vec<u32>>),
    /// ℤ → R, n ↦ n·1.
    Reduction,
}

impl Homomorphism {
    /// Tabulate `f` on a finite source and check it is a unital ring map.
    pub fn new(
        source: &Ring,
        target: &Ring,
        f: impl Fn(&Element) -> Result<Element>,
    ) -> Result<Homomorphism> {
        let elems = source.elements()?;
        let table = elems
            .iter()
            .map(|a| {
                let b = f(a)?;
                target.index_of(&b).map_err(|_| {
                    Error::NotHomomorphism(format!("image of {a} is not an element of {target}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Homomorphism::from_table(source, target, table)
    }

    pub(crate) fn from_table(source: &Ring, target: &Ring, table: Vec<u32>) -> Result<Homomorphism> {
        let (s, t) = (source.require_finite("homomorphism source")?, target.require_finite("homomorphism target")?);
        let bad = |what: String| Err(Error::NotHomomorphism(what));
        if table[s.one as usize] != t.one {
            return bad("1 is not sent to 1".into());
        }
        for a in s.elements() {
            for b in s.elements() {
                let (fa, fb) = (table[a as usize], table[b as usize]);
                if table[s.add(a, b) as usize] != t.add(fa, fb) {
                    return bad(format!("f({0}+{1}) != f({0})+f({1})", s.labels[a as usize], s.labels[b as usize]));
                }
                if table[s.mul(a, b) as usize] != t.mul(fa, fb) {
                    return bad(format!("f({0}*{1}) != f({0})*f({1})", s.labels[a as usize], s.labels[b as usize]));
                }
            }
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            map: MapKind::Table(Arc::new(table)),
        })
    }

    /// The unique ring map ℤ → R.
    pub fn reduction(target: &Ring) -> Result<Homomorphism> {
        target.require_finite("reduction target")?;
        Ok(Homomorphism {
            source: Ring::integers(),
            target: target.clone(),
            map: MapKind::Reduction,
        })
    }

    pub fn identity(ring: &Ring) -> Result<Homomorphism> {
        let f = ring.require_finite("identity map")?;
        Homomorphism::from_table(ring, ring, f.elements().collect())
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub(crate) fn at(&self, a: u32) -> u32 {
        match &self.map {
            MapKind::Table(t) => t[a as usize],
            MapKind::Reduction => unreachable!("reduction has no index table"),
        }
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        match &self.map {
            MapKind::Table(t) => Ok(self.target.elem(t[self.source.index_of(a)? as usize])),
            MapKind::Reduction => self.target.element(&ElemExpr::int(self.source.int_of(a)?.clone())),
        }
    }

    pub fn kernel(&self) -> Ideal {
        self.preimage_ideal(&Ideal::zero(&self.target)).expect("zero ideal of the target")
    }

    pub fn is_injective(&self) -> bool {
        match &self.map {
            MapKind::Table(t) => {
                let img = ElemSet::from_indices(self.target.size().unwrap(), t.iter().copied());
                img.len() == t.len()
            }
            MapKind::Reduction => false,
        }
    }

    pub fn is_surjective(&self) -> bool {
        match &self.map {
            MapKind::Table(t) => ElemSet::from_indices(self.target.size().unwrap(), t.iter().copied()).is_full(),
            MapKind::Reduction => {
                let f = self.target.finite().unwrap();
                let mut acc = f.zero;
                let mut hit = ElemSet::empty(f.size);
                loop {
                    if !hit.insert(acc) {
                        break;
                    }
                    acc = f.add(acc, f.one);
                }
                hit.is_full()
            }
        }
    }

    /// f(I); only defined for surjective f, where it is guaranteed to be an ideal.
    pub fn image_ideal(&self, i: &Ideal) -> Result<Ideal> {
        self.source.check_same(i.ring())?;
        if !self.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let gens = i
            .generators()
            .iter()
            .map(|g| self.apply(g))
            .collect::<Result<Vec<_>>>()?;
        match &self.map {
            MapKind::Reduction => Ideal::from_generators(&self.target, &gens),
            MapKind::Table(t) => {
                let set = ElemSet::from_indices(self.target.size().unwrap(), i.set().iter().map(|a| t[a as usize]));
                Ideal::from_set(&self.target, &set)
            }
        }
    }

    /// f⁻¹(K), always an ideal.
    pub fn preimage_ideal(&self, k: &Ideal) -> Result<Ideal> {
        self.target.check_same(k.ring())?;
        match &self.map {
            MapKind::Table(t) => {
                let set = ElemSet::from_indices(
                    self.source.size().unwrap(),
                    (0..t.len() as u32).filter(|&a| k.set().contains(t[a as usize])),
                );
                Ideal::from_set(&self.source, &set)
            }
            MapKind::Reduction => {
                // The least d ≥ 1 with d·1 ∈ K generates the preimage.
                let f = self.target.finite().unwrap();
                let mut acc = f.one;
                let mut d = 1u64;
                while !k.set().contains(acc) {
                    acc = f.add(acc, f.one);
                    d += 1;
                }
                Ok(Ideal::integer(d))
            }
        }
    }
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homomorphism({} -> {})", self.source, self.target)
    }
}

/// δ(f⁻¹(J)) = f⁻¹(γ(J)) for every ideal J of the target.
pub fn is_delta_gamma_homomorphism(f: &Homomorphism, delta: &Expansion, gamma: &Expansion) -> Result<bool> {
    f.source.check_same(delta.ring())?;
    f.target.check_same(gamma.ring())?;
    for j in crate::ideal::enumerate_ideals(&f.target)? {
        let lhs = delta.apply(&f.preimage_ideal(&j)?)?;
        let rhs = f.preimage_ideal(&gamma.apply(&j)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// R/J with its canonical projection.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub ring: Ring,
    pub base: Ring,
    pub ideal: Ideal,
    pub projection: Homomorphism,
}

/// R/J. Cosets are represented by their least member in base order.
pub fn quotient_ring(base: &Ring, j: &Ideal) -> Result<QuotientRing> {
    base.check_same(j.ring())?;
    if !j.is_proper() {
        return Err(Error::ImproperIdeal(format!("cannot form {base}/{j}: the ideal is the whole ring")));
    }
    let f = match base.finite() {
        Some(f) => f,
        None => {
            let n = j.integer_generator().unwrap();
            if n == 0 {
                return Err(Error::Infinite("quotient by the zero ideal"));
            }
            let ring = Ring::modular(n)?;
            return Ok(QuotientRing {
                projection: Homomorphism::reduction(&ring)?,
                ring,
                base: base.clone(),
                ideal: j.clone(),
            });
        }
    };
    let modulus = j.set().clone();
    let mut class_of = vec![u32::MAX; f.size];
    let mut reps = Vec::new();
    for a in f.elements() {
        if class_of[a as usize] == u32::MAX {
            for x in modulus.iter() {
                class_of[f.add(a, x) as usize] = reps.len() as u32;
            }
            reps.push(a);
        }
    }
    let exprs = reps.iter().map(|&r| f.exprs[r as usize].clone()).collect();
    let spec = RingSpec::Quotient {
        base: Box::new(base.spec().clone()),
        gens: j.generators().iter().map(|g| g.expr()).collect(),
    };
    let (c, r) = (&class_of, &reps);
    let ring = Ring::from_finite(
        spec,
        FiniteKind::Quotient {
            base: base.clone(),
            modulus,
            class_of: class_of.clone(),
        },
        reps.len(),
        c[f.zero as usize],
        c[f.one as usize],
        |a, b| c[f.add(r[a as usize], r[b as usize]) as usize],
        |a, b| c[f.mul(r[a as usize], r[b as usize]) as usize],
        exprs,
    )?;
    let projection = Homomorphism::from_table(base, &ring, class_of)?;
    Ok(QuotientRing {
        ring,
        base: base.clone(),
        ideal: j.clone(),
        projection,
    })
}

impl QuotientRing {
    /// Recover the quotient structure of a ring built by [`quotient_ring`].
    pub fn of(ring: &Ring) -> Option<QuotientRing> {
        match &ring.finite()?.kind {
            FiniteKind::Quotient {
                base,
                modulus,
                class_of,
                ..
            } => Some(QuotientRing {
                ring: ring.clone(),
                base: base.clone(),
                ideal: Ideal::from_set(base, modulus).ok()?,
                projection: Homomorphism::from_table(base, ring, class_of.clone()).ok()?,
            }),
            _ => None,
        }
    }

    /// K/J for an ideal K ⊇ J of the base.
    pub fn image(&self, k: &Ideal) -> Result<Ideal> {
        self.projection.image_ideal(k)
    }

    /// The full preimage of an ideal of R/J.
    pub fn lift(&self, k: &Ideal) -> Result<Ideal> {
        self.projection.preimage_ideal(k)
    }
}

/// R₁ × R₂ with access to its factors.
#[derive(Clone, Debug)]
pub struct ProductRing {
    pub ring: Ring,
    pub left: Ring,
    pub right: Ring,
}

impl ProductRing {
    pub fn new(left: &Ring, right: &Ring) -> Result<ProductRing> {
        Ok(ProductRing {
            ring: Ring::product(left, right)?,
            left: left.clone(),
            right: right.clone(),
        })
    }

    pub fn of(ring: &Ring) -> Option<ProductRing> {
        match &ring.finite()?.kind {
            FiniteKind::Product { left, right } => Some(ProductRing {
                ring: ring.clone(),
                left: left.clone(),
                right: right.clone(),
            }),
            _ => None,
        }
    }

    fn right_size(&self) -> u32 {
        self.right.size().unwrap() as u32
    }

    pub fn projections(&self) -> Result<(Homomorphism, Homomorphism)> {
        let rs = self.right_size();
        let n = self.ring.size().unwrap() as u32;
        Ok((
            Homomorphism::from_table(&self.ring, &self.left, (0..n).map(|i| i / rs).collect())?,
            Homomorphism::from_table(&self.ring, &self.right, (0..n).map(|i| i % rs).collect())?,
        ))
    }

    /// I₁ × I₂.
    pub fn ideal(&self, i1: &Ideal, i2: &Ideal) -> Result<Ideal> {
        self.left.check_same(i1.ring())?;
        self.right.check_same(i2.ring())?;
        let rs = self.right_size();
        let set = ElemSet::from_indices(
            self.ring.size().unwrap(),
            i1.set().iter().flat_map(|a| i2.set().iter().map(move |b| a * rs + b)),
        );
        Ideal::from_set(&self.ring, &set)
    }

    /// The factors (I₁, I₂) with I = I₁ × I₂. Every ideal of a finite
    /// product splits, so `None` signals a bug.
    pub fn split(&self, i: &Ideal) -> Result<Option<(Ideal, Ideal)>> {
        self.ring.check_same(i.ring())?;
        let rs = self.right_size();
        let (ls, rsz) = (self.left.size().unwrap(), rs as usize);
        let l = ElemSet::from_indices(ls, i.set().iter().map(|x| x / rs));
        let r = ElemSet::from_indices(rsz, i.set().iter().map(|x| x % rs));
        let (i1, i2) = (Ideal::from_set(&self.left, &l)?, Ideal::from_set(&self.right, &r)?);
        let whole = self.ideal(&i1, &i2)?;
        Ok((whole == *i).then_some((i1, i2)))
    }
}

/// R(+)M with the product (r₁,m₁)(r₂,m₂) = (r₁r₂, r₁m₂ + r₂m₁).
#[derive(Clone, Debug)]
pub struct Idealization {
    ring: Ring,
    base: Ring,
    module: Module,
}

pub fn idealization(base: &Ring, module: &Module) -> Result<Idealization> {
    let f = base.require_finite("idealization")?;
    base.check_same(module.base())?;
    let ms = module.size();
    let size = f.size * ms;
    if size > MAX_FINITE_SIZE {
        return Err(Error::TooLarge(size, MAX_FINITE_SIZE));
    }
    let split = |i: u32| (i / ms as u32, i % ms as u32);
    let join = |r: u32, m: u32| r * ms as u32 + m;
    let exprs = (0..size as u32)
        .map(|i| {
            let (r, m) = split(i);
            ElemExpr::pair(f.exprs[r as usize].clone(), module.expr(m).clone())
        })
        .collect();
    let spec = RingSpec::Idealization {
        base: Box::new(base.spec().clone()),
        module: module.spec().clone(),
    };
    let ring = Ring::from_finite(
        spec,
        FiniteKind::Idealization {
            base: base.clone(),
            module: module.clone(),
        },
        size,
        join(f.zero, module.zero()),
        join(f.one, module.zero()),
        |x, y| {
            let ((r1, m1), (r2, m2)) = (split(x), split(y));
            join(f.add(r1, r2), module.add(m1, m2))
        },
        |x, y| {
            let ((r1, m1), (r2, m2)) = (split(x), split(y));
            join(f.mul(r1, r2), module.add(module.act(r1, m2), module.act(r2, m1)))
        },
        exprs,
    )?;
    Ok(Idealization {
        ring,
        base: base.clone(),
        module: module.clone(),
    })
}

impl Idealization {
    pub fn of(ring: &Ring) -> Option<Idealization> {
        match &ring.finite()?.kind {
            FiniteKind::Idealization { base, module } => Some(Idealization {
                ring: ring.clone(),
                base: base.clone(),
                module: module.clone(),
            }),
            _ => None,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    /// I(+)N = {(a,n) : a ∈ I, n ∈ N}, an ideal exactly when IM ⊆ N.
    pub fn homogeneous_ideal(&self, i: &Ideal, n: &Submodule) -> Result<Ideal> {
        self.base.check_same(i.ring())?;
        if !self.module.same(n.module()) {
            return Err(Error::InvalidModule(format!("submodule is not in {}", self.module)));
        }
        if !self.module.ideal_times(i)?.is_subset(n) {
            return Err(Error::NotAnIdeal(format!("{i}(+){n} is not an ideal: IM is not contained in N")));
        }
        let ms = self.module.size() as u32;
        let set = ElemSet::from_indices(
            self.ring.size().unwrap(),
            i.set().iter().flat_map(|a| n.set.iter().map(move |m| a * ms + m)),
        );
        Ideal::from_set(&self.ring, &set)
    }

    /// (I, N) with K = I(+)N, or `None` when K is not homogeneous.
    pub fn split(&self, k: &Ideal) -> Result<Option<(Ideal, Submodule)>> {
        self.ring.check_same(k.ring())?;
        let ms = self.module.size() as u32;
        let i = ElemSet::from_indices(self.base.size().unwrap(), k.set().iter().map(|x| x / ms));
        let n = ElemSet::from_indices(
            ms as usize,
            k.set().iter().filter(|x| x / ms == self.base.finite().unwrap().zero).map(|x| x % ms),
        );
        let i = Ideal::from_set(&self.base, &i)?;
        let n = Submodule {
            module: self.module.clone(),
            set: n,
        };
        let whole = self.homogeneous_ideal(&i, &n);
        Ok(match whole {
            Ok(w) if w == *k => Some((i, n)),
            _ => None,
        })
    }

    /// Every pair (I, N) with IM ⊆ N.
    pub fn homogeneous_pairs(&self) -> Result<Vec<(Ideal, Submodule)>> {
        let subs = self.module.submodules();
        let mut out = Vec::new();
        for i in crate::ideal::enumerate_ideals(&self.base)? {
            let im = self.module.ideal_times(&i)?;
            for n in subs.iter().filter(|n| im.is_subset(n)) {
                out.push((i.clone(), n.clone()));
            }
        }
        Ok(out)
    }

    /// (r, m) ↦ r.
    pub fn projection(&self) -> Result<Homomorphism> {
        let ms = self.module.size() as u32;
        let n = self.ring.size().unwrap() as u32;
        Homomorphism::from_table(&self.ring, &self.base, (0..n).map(|x| x / ms).collect())
    }

    /// r ↦ (r, 0).
    pub fn inclusion(&self) -> Result<Homomorphism> {
        let ms = self.module.size() as u32;
        let b = self.base.finite().unwrap();
        Homomorphism::from_table(&self.base, &self.ring, b.elements().map(|r| r * ms + self.module.zero()).collect())
    }
}

/// A multiplicatively closed subset containing 1 and not 0.
#[derive(Clone)]
pub struct MultiplicativeSet {
    ring: Ring,
    pub(crate) set: ElemSet,
}

impl MultiplicativeSet {
    /// Exactly the listed elements; they must already be closed.
    pub fn new(ring: &Ring, elems: &[Element]) -> Result<MultiplicativeSet> {
        let f = ring.require_finite("multiplicative sets")?;
        let idx = elems.iter().map(|e| ring.index_of(e)).collect::<Result<Vec<_>>>()?;
        let set = ElemSet::from_indices(f.size, idx);
        if !set.contains(f.one) {
            return Err(Error::MultiplicativeSet("1 is not in the set".into()));
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(f.mul(a, b)) {
                    return Err(Error::MultiplicativeSet(format!(
                        "{}*{} is not in the set",
                        f.labels[a as usize], f.labels[b as usize]
                    )));
                }
            }
        }
        MultiplicativeSet::checked(ring, set)
    }

    /// The smallest multiplicative set containing `gens`.
    pub fn generated_by(ring: &Ring, gens: &[Element]) -> Result<MultiplicativeSet> {
        let f = ring.require_finite("multiplicative sets")?;
        let mut set = ElemSet::empty(f.size);
        set.insert(f.one);
        let mut work = gens.iter().map(|e| ring.index_of(e)).collect::<Result<Vec<_>>>()?;
        while let Some(x) = work.pop() {
            if !set.insert(x) {
                continue;
            }
            let cur: Vec<u32> = set.iter().collect();
            work.extend(cur.into_iter().map(|y| f.mul(x, y)).filter(|p| !set.contains(*p)));
        }
        MultiplicativeSet::checked(ring, set)
    }

    pub fn units(ring: &Ring) -> Result<MultiplicativeSet> {
        let f = ring.require_finite("multiplicative sets")?;
        MultiplicativeSet::checked(ring, f.units.clone())
    }

    /// r(R): elements with zero annihilator.
    pub fn regular_elements(ring: &Ring) -> Result<MultiplicativeSet> {
        let f = ring.require_finite("multiplicative sets")?;
        MultiplicativeSet::checked(ring, ElemSet::from_indices(f.size, f.zero_divisors.complement_iter()))
    }

    fn checked(ring: &Ring, set: ElemSet) -> Result<MultiplicativeSet> {
        let f = ring.finite().unwrap();
        if set.contains(f.zero) {
            return Err(Error::MultiplicativeSet("contains 0, so the localization is the zero ring".into()));
        }
        Ok(MultiplicativeSet {
            ring: ring.clone(),
            set,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn contains(&self, a: &Element) -> Result<bool> {
        Ok(self.set.contains(self.ring.index_of(a)?))
    }

    pub fn elements(&self) -> Vec<Element> {
        self.set.iter().map(|i| self.ring.elem(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn meets(&self, i: &Ideal) -> Result<bool> {
        self.ring.check_same(i.ring())?;
        Ok(self.set.intersects(i.set()))
    }
}

impl fmt::Display for MultiplicativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for MultiplicativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}

/// S⁻¹R with the canonical map r ↦ r/1.
#[derive(Clone, Debug)]
pub struct Localization {
    ring: Ring,
    base: Ring,
    set: MultiplicativeSet,
    canonical: Homomorphism,
}

/// Fractions r/s, identified when u(rs′ − r′s) = 0 for some u ∈ S. Each class
/// is represented by its least pair (r, s) in base index order.
pub fn localize(base: &Ring, s: &MultiplicativeSet) -> Result<Localization> {
    base.check_same(s.ring())?;
    let f = base.require_finite("localization")?;
    let n = f.size;
    let denoms: Vec<u32> = s.set.iter().collect();
    // r/s = r'/s' iff rs' - r's lies in the kernel {r : ur = 0 for some u ∈ S}.
    let kernel = ElemSet::from_indices(n, f.elements().filter(|&r| denoms.iter().any(|&u| f.mul(u, r) == f.zero)));
    let mut class_of = vec![u32::MAX; n * n];
    let mut reps: Vec<(u32, u32)> = Vec::new();
    for r in f.elements() {
        for &d in &denoms {
            if class_of[r as usize * n + d as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push((r, d));
            for r2 in f.elements() {
                for &d2 in &denoms {
                    if kernel.contains(f.sub(f.mul(r, d2), f.mul(r2, d))) {
                        class_of[r2 as usize * n + d2 as usize] = c;
                    }
                }
            }
        }
    }
    let one_rep = |r: u32| class_of[r as usize * n + f.one as usize];
    let exprs = reps
        .iter()
        .map(|&(r, d)| {
            if d == f.one {
                f.exprs[r as usize].clone()
            } else {
                ElemExpr::frac(f.exprs[r as usize].clone(), f.exprs[d as usize].clone())
            }
        })
        .collect();
    let spec = RingSpec::Localization {
        base: Box::new(base.spec().clone()),
        set: s.set.iter().map(|i| f.exprs[i as usize].clone()).collect(),
    };
    let (c, rp) = (&class_of, &reps);
    let ring = Ring::from_finite(
        spec,
        FiniteKind::Localization {
            base: base.clone(),
            set: s.set.clone(),
            class_of: class_of.clone(),
        },
        reps.len(),
        one_rep(f.zero),
        one_rep(f.one),
        |x, y| {
            let ((r1, s1), (r2, s2)) = (rp[x as usize], rp[y as usize]);
            let num = f.add(f.mul(r1, s2), f.mul(r2, s1));
            c[num as usize * n + f.mul(s1, s2) as usize]
        },
        |x, y| {
            let ((r1, s1), (r2, s2)) = (rp[x as usize], rp[y as usize]);
            c[f.mul(r1, r2) as usize * n + f.mul(s1, s2) as usize]
        },
        exprs,
    )?;
    let canonical = Homomorphism::from_table(base, &ring, f.elements().map(one_rep).collect())?;
    Ok(Localization {
        ring,
        base: base.clone(),
        set: s.clone(),
        canonical,
    })
}

impl Localization {
    pub fn of(ring: &Ring) -> Option<Localization> {
        match &ring.finite()?.kind {
            FiniteKind::Localization {
                base, set, class_of, ..
            } => {
                let b = base.finite()?;
                let table = b.elements().map(|r| class_of[r as usize * b.size + b.one as usize]).collect();
                Some(Localization {
                    ring: ring.clone(),
                    base: base.clone(),
                    set: MultiplicativeSet {
                        ring: base.clone(),
                        set: set.clone(),
                    },
                    canonical: Homomorphism::from_table(base, ring, table).ok()?,
                })
            }
            _ => None,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn set(&self) -> &MultiplicativeSet {
        &self.set
    }

    pub fn canonical(&self) -> &Homomorphism {
        &self.canonical
    }

    /// S⁻¹I, generated by the images of I.
    pub fn extend(&self, i: &Ideal) -> Result<Ideal> {
        self.base.check_same(i.ring())?;
        let imgs = i
            .generators()
            .iter()
            .map(|g| self.canonical.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::from_generators(&self.ring, &imgs)
    }

    /// K^c, the preimage under r ↦ r/1.
    pub fn contract(&self, k: &Ideal) -> Result<Ideal> {
        self.canonical.preimage_ideal(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    fn ideal(r: &Ring, g: &[i64]) -> Ideal {
        Ideal::from_generators(r, &g.iter().map(|&v| r.int(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn quotient_of_z12() {
        let r = z(12);
        let q = quotient_ring(&r, &ideal(&r, &[6])).unwrap();
        assert_eq!(q.ring.size(), Some(6));
        assert_eq!(q.ring.recipe(), "quot(Z12, (6))");
        let a = q.ring.int(4);
        assert_eq!(q.ring.mul(&a, &q.ring.int(5)).unwrap(), q.ring.int(2));
        assert_eq!(q.projection.kernel(), ideal(&r, &[6]));
        let zero = quotient_ring(&r, &Ideal::zero(&r)).unwrap();
        assert!(zero.projection.is_injective());
        assert!(quotient_ring(&r, &Ideal::whole(&r)).is_err());
    }

    #[test]
    fn quotient_to_residue_field() {
        let p = Ring::poly_quotient(4, &[0, 0, 0, 1]).unwrap();
        let m = Ideal::from_generators(&p, &[p.int(2), p.parse_element("x").unwrap()]).unwrap();
        let q = quotient_ring(&p, &m).unwrap();
        assert_eq!(q.ring.size(), Some(2));
        assert!(q.ring.classify().is_field);
    }

    #[test]
    fn quotient_of_integers() {
        let q = quotient_ring(&Ring::integers(), &Ideal::integer(6)).unwrap();
        assert_eq!(q.ring.recipe(), "Z6");
        let three = q.ring.int(3);
        assert_eq!(q.lift(&Ideal::principal(&three).unwrap()).unwrap(), Ideal::integer(3));
        assert_eq!(q.projection.kernel(), Ideal::integer(6));
    }

    #[test]
    fn idealization_z2() {
        let z2 = z(2);
        let m = Module::new(&z2, &crate::ring::ModuleSpec::Regular).unwrap();
        let id = idealization(&z2, &m).unwrap();
        let r = id.ring();
        assert_eq!(r.size(), Some(4));
        let e = r.parse_element("(0,1)").unwrap();
        assert_eq!(r.mul(&e, &e).unwrap(), r.zero());
        let nil = Ideal::zero(r).radical();
        let shown: Vec<String> = nil.elements().unwrap().iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["(0,0)", "(0,1)"]);
    }

    #[test]
    fn homogeneous_ideals() {
        let z4 = z(4);
        let m = Module::new(&z4, &crate::ring::ModuleSpec::Regular).unwrap();
        let id = idealization(&z4, &m).unwrap();
        let i = ideal(&z4, &[2]);
        let k = id.homogeneous_ideal(&i, &m.full()).unwrap();
        assert_eq!(k.len(), Some(8));
        let (i2, n2) = id.split(&k).unwrap().unwrap();
        assert_eq!((i2, n2.len()), (i, 4));
        let zero_sub = &m.submodules()[0];
        assert!(id.homogeneous_ideal(&Ideal::whole(&z4), zero_sub).is_err());
    }

    #[test]
    fn localization_examples() {
        let r = z(12);
        let s = MultiplicativeSet::new(&r, &[r.int(1), r.int(4)]).unwrap();
        let l = localize(&r, &s).unwrap();
        assert_eq!(l.ring().size(), Some(3));
        assert_eq!(l.canonical().kernel(), ideal(&r, &[3]));
        let z6 = z(6);
        let u = MultiplicativeSet::new(&z6, &[z6.int(1), z6.int(5)]).unwrap();
        let l = localize(&z6, &u).unwrap();
        assert!(l.canonical().is_injective() && l.canonical().is_surjective());
        let one = MultiplicativeSet::new(&z6, &[z6.int(1)]).unwrap();
        assert_eq!(localize(&z6, &one).unwrap().ring().size(), Some(6));
        assert!(MultiplicativeSet::new(&z6, &[z6.int(2)]).is_err());
        assert!(MultiplicativeSet::new(&z6, &[z6.int(1), z6.int(2)]).is_err());
    }

    #[test]
    fn homomorphism_checks() {
        let z2 = z(2);
        let p = ProductRing::new(&z2, &z2).unwrap();
        let diag = Homomorphism::new(&z2, &p.ring, |a| {
            p.ring.element(&ElemExpr::pair(a.expr(), a.expr()))
        })
        .unwrap();
        let k = p.ideal(&Ideal::whole(&z2), &Ideal::zero(&z2)).unwrap();
        assert!(diag.preimage_ideal(&k).unwrap().is_zero());
        assert!(matches!(diag.image_ideal(&Ideal::whole(&z2)), Err(Error::NotSurjective)));
        let bad = Homomorphism::new(&z(4), &z2, |_| Ok(z2.one()));
        assert!(matches!(bad, Err(Error::NotHomomorphism(_))));
    }

    #[test]
    fn product_split() {
        let p = ProductRing::new(&z(4), &z(9)).unwrap();
        let ideals = crate::ideal::enumerate_ideals(&p.ring).unwrap();
        assert_eq!(ideals.len(), 9);
        for i in &ideals {
            assert!(p.split(i).unwrap().is_some());
        }
    }
}
