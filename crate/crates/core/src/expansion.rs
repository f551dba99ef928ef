//! Ideal expansions: maps δ on the ideal lattice with I ⊆ δ(I) and
//! I ⊆ J ⇒ δ(I) ⊆ δ(J).

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::constructions::{
    idealization, localize, quotient_ring, Idealization, Localization, Module, MultiplicativeSet,
    ProductRing, QuotientRing,
};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{integers, ElemExpr, Ring};

/// The construction recipe of an expansion. Derived kinds take their
/// structure (J, the factors, M or S) from the ring they live on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Delta0,
    Delta1,
    Full,
    DeltaPlus(Vec<ElemExpr>),
    DeltaStar(Vec<ElemExpr>),
    Compose(Box<Recipe>, Box<Recipe>),
    /// δ_q on R/J.
    Quotient(Box<Recipe>),
    /// δ_× on R₁ × R₂.
    Product(Box<Recipe>, Box<Recipe>),
    /// δ₍₊₎ on R(+)M.
    Idealization(Box<Recipe>),
    /// δ_S on S⁻¹R.
    Localized(Box<Recipe>),
}

fn gens_text(g: &[ElemExpr]) -> String {
    g.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Delta0 => write!(f, "delta0"),
            Recipe::Delta1 => write!(f, "delta1"),
            Recipe::Full => write!(f, "full"),
            Recipe::DeltaPlus(g) => write!(f, "delta_plus(gens=[{}])", gens_text(g)),
            Recipe::DeltaStar(g) => write!(f, "delta_star(gens=[{}])", gens_text(g)),
            Recipe::Compose(a, b) => write!(f, "compose({a}, {b})"),
            Recipe::Quotient(d) => write!(f, "quotient({d})"),
            Recipe::Product(a, b) => write!(f, "product({a}, {b})"),
            Recipe::Idealization(d) => write!(f, "idealization({d})"),
            Recipe::Localized(d) => write!(f, "localized({d})"),
        }
    }
}

/// A validated expansion on one ring. Finite rings carry the full table
/// over the ideal lattice.
#[derive(Clone)]
pub struct Expansion(Arc<ExpansionData>);

struct ExpansionData {
    ring: Ring,
    recipe: Recipe,
    table: Option<Vec<usize>>,
    /// Lattice indices of non-homogeneous ideals (idealization only).
    nonhomogeneous: Vec<usize>,
}

/// Outcome of one profile flag, with the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Flag {
    fn from_search(w: Option<String>) -> Flag {
        Flag {
            holds: w.is_none(),
            witness: w,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionProfile {
    pub intersection_preserving: Flag,
    pub idempotent_on_all: Flag,
    pub zero_fixed: Flag,
    pub radical_commuting: Flag,
    /// For every J and x ∉ δ(J): (δ(J):x) ⊆ δ(J:x) and δ(J:x) ≠ R.
    pub colon_condition: Flag,
}

/// Parameters n, m, x of ℤ scanned by the bounded ℤ profile.
pub const ZZ_PROFILE_BOUND: u64 = 120;

fn int_param(ring: &Ring, gens: &[ElemExpr]) -> Result<u64> {
    let elems = gens.iter().map(|g| ring.element(g)).collect::<Result<Vec<_>>>()?;
    Ok(Ideal::from_generators(ring, &elems)?.integer_generator().unwrap())
}

impl Expansion {
    /// Build from a recipe, validating both axioms on finite rings.
    pub fn new(ring: &Ring, recipe: &Recipe) -> Result<Expansion> {
        match recipe {
            Recipe::Delta0 | Recipe::Delta1 | Recipe::Full => Expansion::build(ring, recipe.clone(), Vec::new()),
            Recipe::DeltaPlus(g) | Recipe::DeltaStar(g) => {
                let elems = g.iter().map(|e| ring.element(e)).collect::<Result<Vec<_>>>()?;
                let j = Ideal::from_generators(ring, &elems)?;
                if matches!(recipe, Recipe::DeltaPlus(_)) {
                    Expansion::delta_plus(&j)
                } else {
                    Expansion::delta_star(&j)
                }
            }
            Recipe::Compose(a, b) => Expansion::new(ring, a)?.compose(&Expansion::new(ring, b)?),
            Recipe::Quotient(d) => {
                let q = QuotientRing::of(ring)
                    .ok_or_else(|| Error::InvalidSpec(format!("{ring} is not a quotient ring")))?;
                Expansion::new(&q.base, d)?.quotient_on(&q)
            }
            Recipe::Product(a, b) => {
                let p = ProductRing::of(ring)
                    .ok_or_else(|| Error::InvalidSpec(format!("{ring} is not a product ring")))?;
                Expansion::new(&p.left, a)?.product_on(&Expansion::new(&p.right, b)?, &p)
            }
            Recipe::Idealization(d) => {
                let id = Idealization::of(ring)
                    .ok_or_else(|| Error::InvalidSpec(format!("{ring} is not an idealization")))?;
                Expansion::new(id.base(), d)?.idealization_on(&id)
            }
            Recipe::Localized(d) => {
                let l = Localization::of(ring)
                    .ok_or_else(|| Error::InvalidSpec(format!("{ring} is not a localization")))?;
                Expansion::new(l.base(), d)?.localized_on(&l)
            }
        }
    }

    pub fn delta0(ring: &Ring) -> Expansion {
        Expansion::build(ring, Recipe::Delta0, Vec::new()).expect("identity is an expansion")
    }

    pub fn delta1(ring: &Ring) -> Expansion {
        Expansion::build(ring, Recipe::Delta1, Vec::new()).expect("radical is an expansion")
    }

    pub fn full(ring: &Ring) -> Expansion {
        Expansion::build(ring, Recipe::Full, Vec::new()).expect("constant R is an expansion")
    }

    /// δ₊(I) = I + J.
    pub fn delta_plus(j: &Ideal) -> Result<Expansion> {
        let g = j.generators().iter().map(|e| e.expr()).collect();
        Expansion::build(j.ring(), Recipe::DeltaPlus(g), Vec::new())
    }

    /// δ⋆(I) = (I : P).
    pub fn delta_star(p: &Ideal) -> Result<Expansion> {
        let g = p.generators().iter().map(|e| e.expr()).collect();
        Expansion::build(p.ring(), Recipe::DeltaStar(g), Vec::new())
    }

    /// (self ∘ inner)(I) = self(inner(I)).
    pub fn compose(&self, inner: &Expansion) -> Result<Expansion> {
        self.ring().check_same(inner.ring())?;
        let recipe = Recipe::Compose(Box::new(self.recipe().clone()), Box::new(inner.recipe().clone()));
        match (&self.0.table, &inner.0.table) {
            (Some(a), Some(b)) => {
                let t = b.iter().map(|&i| a[i]).collect();
                Expansion::from_table(self.ring(), recipe, t, Vec::new())
            }
            _ => Expansion::build(self.ring(), recipe, Vec::new()),
        }
    }

    /// δ_q on R/J: K/J ↦ δ(K)/J with K the full preimage.
    pub fn derive_quotient(&self, j: &Ideal) -> Result<Expansion> {
        self.quotient_on(&quotient_ring(self.ring(), j)?)
    }

    pub(crate) fn quotient_on(&self, q: &QuotientRing) -> Result<Expansion> {
        let recipe = Recipe::Quotient(Box::new(self.recipe().clone()));
        let t = crate::ideal::enumerate_ideals(&q.ring)?
            .iter()
            .map(|k| Ok(q.image(&self.apply(&q.lift(k)?)?)?.idx()))
            .collect::<Result<Vec<_>>>()?;
        Expansion::from_table(&q.ring, recipe, t, Vec::new())
    }

    /// δ_× on R₁ × R₂, applied componentwise.
    pub fn derive_product(&self, right: &Expansion) -> Result<Expansion> {
        self.product_on(right, &ProductRing::new(self.ring(), right.ring())?)
    }

    pub(crate) fn product_on(&self, right: &Expansion, p: &ProductRing) -> Result<Expansion> {
        let recipe = Recipe::Product(Box::new(self.recipe().clone()), Box::new(right.recipe().clone()));
        let t = crate::ideal::enumerate_ideals(&p.ring)?
            .iter()
            .map(|k| {
                let (a, b) = p.split(k)?.ok_or_else(|| {
                    Error::NotAnIdeal(format!("ideal {k} of {} does not split as I1 x I2", p.ring))
                })?;
                Ok(p.ideal(&self.apply(&a)?, &right.apply(&b)?)?.idx())
            })
            .collect::<Result<Vec<_>>>()?;
        Expansion::from_table(&p.ring, recipe, t, Vec::new())
    }

    /// δ₍₊₎ on R(+)M: I(+)N ↦ δ(I)(+)M. Non-homogeneous ideals K are
    /// homogenized to π(K)(+)M first and recorded.
    pub fn derive_idealization(&self, m: &Module) -> Result<Expansion> {
        self.idealization_on(&idealization(self.ring(), m)?)
    }

    pub(crate) fn idealization_on(&self, id: &Idealization) -> Result<Expansion> {
        let recipe = Recipe::Idealization(Box::new(self.recipe().clone()));
        let proj = id.projection()?;
        let full = id.module().full();
        let mut odd = Vec::new();
        let mut t = Vec::new();
        for k in crate::ideal::enumerate_ideals(id.ring())? {
            let i = match id.split(&k)? {
                Some((i, _)) => i,
                None => {
                    odd.push(k.idx());
                    proj.image_ideal(&k)?
                }
            };
            t.push(id.homogeneous_ideal(&self.apply(&i)?, &full)?.idx());
        }
        Expansion::from_table(id.ring(), recipe, t, odd)
    }

    /// δ_S on S⁻¹R: K ↦ S⁻¹δ(K^c), using the contraction as representative.
    pub fn derive_localized(&self, s: &MultiplicativeSet) -> Result<Expansion> {
        self.localized_on(&localize(self.ring(), s)?)
    }

    pub(crate) fn localized_on(&self, l: &Localization) -> Result<Expansion> {
        let recipe = Recipe::Localized(Box::new(self.recipe().clone()));
        let t = crate::ideal::enumerate_ideals(l.ring())?
            .iter()
            .map(|k| Ok(l.extend(&self.apply(&l.contract(k)?)?)?.idx()))
            .collect::<Result<Vec<_>>>()?;
        Expansion::from_table(l.ring(), recipe, t, Vec::new())
    }

    fn build(ring: &Ring, recipe: Recipe, odd: Vec<usize>) -> Result<Expansion> {
        let f = match ring.finite() {
            None => {
                Expansion::int_value(ring, &recipe, 0)?;
                return Ok(Expansion(Arc::new(ExpansionData {
                    ring: ring.clone(),
                    recipe,
                    table: None,
                    nonhomogeneous: odd,
                })));
            }
            Some(f) => f,
        };
        let lat = &f.lattice;
        let t: Vec<usize> = match &recipe {
            Recipe::Delta0 => (0..lat.len()).collect(),
            Recipe::Delta1 => (0..lat.len()).map(|i| f.radical_of(i)).collect(),
            Recipe::Full => vec![lat.top(); lat.len()],
            Recipe::DeltaPlus(g) => {
                let j = Expansion::param_ideal(ring, g)?;
                (0..lat.len()).map(|i| f.sum_idx(i, j)).collect()
            }
            Recipe::DeltaStar(g) => {
                let p = Expansion::param_ideal(ring, g)?;
                (0..lat.len())
                    .map(|i| lat.find(&f.colon_set(&lat.sets[i], &lat.sets[p])).unwrap())
                    .collect()
            }
            other => return Expansion::new(ring, other),
        };
        Expansion::from_table(ring, recipe, t, odd)
    }

    fn param_ideal(ring: &Ring, g: &[ElemExpr]) -> Result<usize> {
        let elems = g.iter().map(|e| ring.element(e)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::from_generators(ring, &elems)?.idx())
    }

    /// Validate a table against both axioms.
    pub(crate) fn from_table(ring: &Ring, recipe: Recipe, t: Vec<usize>, odd: Vec<usize>) -> Result<Expansion> {
        let f = ring.require_finite("expansion tables")?;
        let lat = &f.lattice;
        let show = |i: usize| Ideal::from_lattice(ring, i).to_string();
        for i in 0..lat.len() {
            if !lat.le(i, t[i]) {
                return Err(Error::ExpansionAxiom(format!(
                    "{recipe} on {ring}: {} is not contained in its image {}",
                    show(i),
                    show(t[i])
                )));
            }
            for j in 0..lat.len() {
                if lat.le(i, j) && !lat.le(t[i], t[j]) {
                    return Err(Error::ExpansionAxiom(format!(
                        "{recipe} on {ring}: not monotone at {} ⊆ {}",
                        show(i),
                        show(j)
                    )));
                }
            }
        }
        Ok(Expansion(Arc::new(ExpansionData {
            ring: ring.clone(),
            recipe,
            table: Some(t),
            nonhomogeneous: odd,
        })))
    }

    /// Closed forms on ℤ: the value at nℤ.
    fn int_value(ring: &Ring, recipe: &Recipe, n: u64) -> Result<u64> {
        Ok(match recipe {
            Recipe::Delta0 => n,
            Recipe::Delta1 => integers::radical(n),
            Recipe::Full => 1,
            Recipe::DeltaPlus(g) => integers::gcd(n, int_param(ring, g)?),
            Recipe::DeltaStar(g) => integers::colon(n, int_param(ring, g)?),
            Recipe::Compose(a, b) => {
                let inner = Expansion::int_value(ring, b, n)?;
                Expansion::int_value(ring, a, inner)?
            }
            _ => return Err(Error::Infinite("derived expansions")),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn recipe(&self) -> &Recipe {
        &self.0.recipe
    }

    pub(crate) fn at(&self, i: usize) -> usize {
        self.0.table.as_ref().expect("finite expansion")[i]
    }

    pub fn apply(&self, i: &Ideal) -> Result<Ideal> {
        self.ring().check_same(i.ring())?;
        match i.integer_generator() {
            Some(n) => Ok(Ideal::integer(Expansion::int_value(self.ring(), self.recipe(), n)?)),
            None => Ok(Ideal::from_lattice(self.ring(), self.at(i.idx()))),
        }
    }

    /// Ideals of an idealization that are not of the form I(+)N.
    pub fn nonhomogeneous_ideals(&self) -> Vec<Ideal> {
        self.0
            .nonhomogeneous
            .iter()
            .map(|&i| Ideal::from_lattice(self.ring(), i))
            .collect()
    }

    /// True when the two expansions agree on every ideal.
    pub fn same_values(&self, other: &Expansion) -> Result<bool> {
        self.ring().check_same(other.ring())?;
        match (&self.0.table, &other.0.table) {
            (Some(a), Some(b)) => Ok(a == b),
            _ => Ok((0..=ZZ_PROFILE_BOUND).all(|n| {
                Expansion::int_value(self.ring(), self.recipe(), n).ok()
                    == Expansion::int_value(other.ring(), other.recipe(), n).ok()
            })),
        }
    }

    /// δ(I) ⊆ γ(I) for every I.
    pub fn pointwise_le(&self, other: &Expansion) -> Result<bool> {
        self.ring().check_same(other.ring())?;
        let f = self.ring().require_finite("pointwise comparison")?;
        Ok((0..f.lattice.len()).all(|i| f.lattice.le(self.at(i), other.at(i))))
    }

    /// δ(I) ≠ R for every proper I.
    pub fn keeps_proper(&self) -> Result<bool> {
        let f = self.ring().require_finite("expansion scan")?;
        let top = f.lattice.top();
        Ok(f.lattice.proper().all(|i| self.at(i) != top))
    }

    pub fn profile(&self) -> Result<ExpansionProfile> {
        match self.ring().finite() {
            Some(_) => Ok(self.profile_finite()),
            None => self.profile_integers(),
        }
    }

    fn profile_finite(&self) -> ExpansionProfile {
        let ring = self.ring();
        let f = ring.finite().unwrap();
        let lat = &f.lattice;
        let n = lat.len();
        let show = |i: usize| Ideal::from_lattice(ring, i).to_string();
        let d = |i: usize| self.at(i);

        let mut w = None;
        'outer: for i in 0..n {
            for j in i..n {
                if d(f.meet_idx(i, j)) != f.meet_idx(d(i), d(j)) {
                    w = Some(format!("I={}, J={}", show(i), show(j)));
                    break 'outer;
                }
            }
        }
        let intersection_preserving = Flag::from_search(w);
        let idempotent_on_all =
            Flag::from_search((0..n).find(|&i| d(d(i)) != d(i)).map(|i| format!("I={}", show(i))));
        let zero_fixed = Flag::from_search((d(0) != 0).then(|| format!("delta(0)={}", show(d(0)))));
        let radical_commuting = Flag::from_search(
            (0..n)
                .find(|&i| f.radical_of(d(i)) != d(f.radical_of(i)))
                .map(|i| format!("I={}", show(i))),
        );
        let mut w = None;
        'colon: for j in 0..n {
            let dj = &lat.sets[d(j)];
            for x in dj.complement_iter() {
                let jx = f.colon_of(j, x);
                let lhs = f.colon_of(d(j), x);
                if !lat.le(lhs, d(jx)) || d(jx) == lat.top() {
                    w = Some(format!("J={}, x={}", show(j), f.labels[x as usize]));
                    break 'colon;
                }
            }
        }
        ExpansionProfile {
            intersection_preserving,
            idempotent_on_all,
            zero_fixed,
            radical_commuting,
            colon_condition: Flag::from_search(w),
        }
    }

    /// Bounded scan over n, m, x ≤ [`ZZ_PROFILE_BOUND`] using the closed forms.
    fn profile_integers(&self) -> Result<ExpansionProfile> {
        let (r, rec) = (self.ring(), self.recipe());
        let d = |n: u64| Expansion::int_value(r, rec, n);
        let b = ZZ_PROFILE_BOUND;
        let le = |a: u64, c: u64| if c == 0 { a == 0 } else { a % c == 0 };
        let mut ip = None;
        let mut idem = None;
        let mut rc = None;
        let mut cc = None;
        for n in 0..=b {
            let dn = d(n)?;
            if idem.is_none() && d(dn)? != dn {
                idem = Some(format!("I=({n})"));
            }
            if rc.is_none() && integers::radical(dn) != d(integers::radical(n))? {
                rc = Some(format!("I=({n})"));
            }
            for m in n..=b {
                if ip.is_none() && d(integers::lcm(n, m)?)? != integers::lcm(dn, d(m)?)? {
                    ip = Some(format!("I=({n}), J=({m})"));
                }
            }
            for x in 0..=b {
                if cc.is_some() || le(x, dn) {
                    continue;
                }
                let jx = integers::colon(n, x);
                let djx = d(jx)?;
                if !le(integers::colon(dn, x), djx) || djx == 1 {
                    cc = Some(format!("J=({n}), x={x}"));
                }
            }
        }
        let z = d(0)?;
        Ok(ExpansionProfile {
            intersection_preserving: Flag::from_search(ip),
            idempotent_on_all: Flag::from_search(idem),
            zero_fixed: Flag::from_search((z != 0).then(|| format!("delta(0)=({z})"))),
            radical_commuting: Flag::from_search(rc),
            colon_condition: Flag::from_search(cc),
        })
    }
}

impl PartialEq for Expansion {
    fn eq(&self, other: &Self) -> bool {
        self.ring() == other.ring() && self.same_values(other).unwrap_or(false)
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.recipe)
    }
}

impl fmt::Debug for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.0.recipe, self.0.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::MultiplicativeSet;
    use crate::ring::ModuleSpec;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    fn ideal(r: &Ring, g: &[i64]) -> Ideal {
        Ideal::from_generators(r, &g.iter().map(|&v| r.int(v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn catalog_on_z8() {
        let r = z(8);
        let d1 = Expansion::delta1(&r);
        let table: Vec<String> = crate::ideal::enumerate_ideals(&r)
            .unwrap()
            .iter()
            .map(|i| d1.apply(i).unwrap().to_string())
            .collect();
        assert_eq!(table, ["(2)", "(2)", "(2)", "(1)"]);
        let d0 = Expansion::delta0(&r);
        assert_eq!(d0.apply(&ideal(&r, &[4])).unwrap(), ideal(&r, &[4]));
    }

    #[test]
    fn catalog_on_z12() {
        let r = z(12);
        assert_eq!(Expansion::delta1(&r).apply(&Ideal::zero(&r)).unwrap(), ideal(&r, &[6]));
        let dp = Expansion::delta_plus(&ideal(&r, &[2])).unwrap();
        assert!(!dp.apply(&ideal(&r, &[3])).unwrap().is_proper());
        assert_eq!(dp.to_string(), "delta_plus(gens=[2])");
        assert!(!Expansion::full(&r).apply(&Ideal::zero(&r)).unwrap().is_proper());
    }

    #[test]
    fn integer_closed_forms() {
        let zz = Ring::integers();
        let dp = Expansion::delta_plus(&Ideal::integer(3)).unwrap();
        assert_eq!(dp.apply(&Ideal::integer(5)).unwrap(), Ideal::integer(1));
        let ds = Expansion::delta_star(&Ideal::integer(8)).unwrap();
        assert_eq!(ds.apply(&Ideal::integer(12)).unwrap(), Ideal::integer(3));
        assert_eq!(Expansion::delta1(&zz).apply(&Ideal::integer(12)).unwrap(), Ideal::integer(6));
    }

    #[test]
    fn composition() {
        let r = z(12);
        let d1 = Expansion::delta1(&r);
        let d0 = Expansion::delta0(&r);
        assert_eq!(d1.compose(&d1).unwrap(), d1);
        assert_eq!(d0.compose(&d1).unwrap(), d1);
        let c = d1.compose(&Expansion::delta_plus(&ideal(&r, &[6])).unwrap()).unwrap();
        assert_eq!(c.to_string(), "compose(delta1, delta_plus(gens=[6]))");
    }

    #[test]
    fn bad_table_rejected() {
        let r = z(4);
        let e = Expansion::from_table(&r, Recipe::Delta0, vec![0, 0, 0], Vec::new());
        assert!(matches!(e, Err(Error::ExpansionAxiom(_))));
    }

    #[test]
    fn derived_quotient() {
        let r = z(12);
        let q = Expansion::delta1(&r).derive_quotient(&ideal(&r, &[6])).unwrap();
        assert!(q.apply(&Ideal::zero(q.ring())).unwrap().is_zero());
        let again = Expansion::new(q.ring(), q.recipe()).unwrap();
        assert_eq!(again, q);
    }

    #[test]
    fn derived_product() {
        let (a, b) = (z(4), z(9));
        let e = Expansion::delta1(&a).derive_product(&Expansion::delta1(&b)).unwrap();
        let p = ProductRing::of(e.ring()).unwrap();
        let v = e.apply(&Ideal::zero(e.ring())).unwrap();
        assert_eq!(v, p.ideal(&ideal(&a, &[2]), &ideal(&b, &[3])).unwrap());
    }

    #[test]
    fn derived_idealization() {
        let r = z(8);
        let m = Module::new(&r, &ModuleSpec::Regular).unwrap();
        let e = Expansion::delta1(&r).derive_idealization(&m).unwrap();
        let id = Idealization::of(e.ring()).unwrap();
        let v = e.apply(&Ideal::zero(e.ring())).unwrap();
        assert_eq!(v, id.homogeneous_ideal(&ideal(&r, &[2]), &m.full()).unwrap());
    }

    #[test]
    fn derived_localization() {
        let r = z(12);
        let s = MultiplicativeSet::new(&r, &[r.int(1), r.int(4)]).unwrap();
        let e = Expansion::delta1(&r).derive_localized(&s).unwrap();
        assert!(e.apply(&Ideal::zero(e.ring())).unwrap().is_zero());
        let d0 = Expansion::delta0(&r).derive_localized(&s).unwrap();
        assert_eq!(d0, Expansion::delta0(d0.ring()));
    }

    #[test]
    fn profiles() {
        let r = z(12);
        let p = Expansion::delta1(&r).profile().unwrap();
        assert!(p.intersection_preserving.holds && p.idempotent_on_all.holds && p.radical_commuting.holds);
        // (J:x) is its own δ0-value and is proper when x ∉ J.
        let p = Expansion::delta0(&r).profile().unwrap();
        assert!(p.zero_fixed.holds && p.colon_condition.holds);
        let p = Expansion::delta1(&r).compose(&Expansion::full(&r)).unwrap().profile().unwrap();
        assert!(p.colon_condition.holds && !p.zero_fixed.holds);
        let zz = Expansion::delta1(&Ring::integers()).profile().unwrap();
        assert!(zz.intersection_preserving.holds && zz.zero_fixed.holds);
    }
}
