//! Commutative rings with identity: finite table-driven backends and the
//! symbolic ring of integers.

pub mod integers;
pub mod spec;
pub(crate) mod tables;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::constructions::module::Module;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::lattice::Lattice;
use crate::ideal::Ideal;

pub use spec::{ElemExpr, ModuleSpec, RingSpec};
pub use tables::{EXHAUSTIVE_AXIOM_LIMIT, MAX_FINITE_SIZE, SAMPLED_AXIOM_TRIPLES};
use tables::Tables;

/// A commutative ring with identity. Cheap to clone; immutable.
#[derive(Clone)]
pub struct Ring(pub(crate) Arc<RingData>);

pub(crate) struct RingData {
    pub spec: RingSpec,
    pub text: String,
    pub tag: u64,
    pub backend: Backend,
}

pub(crate) enum Backend {
    Finite(FiniteRing),
    Integers,
}

pub(crate) struct FiniteRing {
    pub t: Tables,
    pub exprs: Vec<ElemExpr>,
    pub labels: Vec<String>,
    pub kind: FiniteKind,
    pub lattice: Lattice,
    pub nilradical: ElemSet,
    pub units: ElemSet,
    /// Elements with a nonzero annihilator, 0 included.
    pub zero_divisors: ElemSet,
    pub cache: RingCache,
}

/// Lattice-indexed operator tables, filled on first use.
#[derive(Default)]
pub(crate) struct RingCache {
    pub products: OnceLock<Vec<usize>>,
    pub colons: OnceLock<Vec<usize>>,
    pub radicals: OnceLock<Vec<usize>>,
}

impl Deref for FiniteRing {
    type Target = Tables;
    fn deref(&self) -> &Tables {
        &self.t
    }
}

pub(crate) enum FiniteKind {
    Modular {
        n: u64,
    },
    Poly {
        n: u64,
        modulus: Vec<u64>,
    },
    /// Index = left * |right| + right.
    Product {
        left: Ring,
        right: Ring,
    },
    /// Index = r * |M| + m.
    Idealization {
        base: Ring,
        module: Module,
    },
    Quotient {
        base: Ring,
        modulus: ElemSet,
        class_of: Vec<u32>,
    },
    Localization {
        base: Ring,
        set: ElemSet,
        /// (r, s) -> class, stored at r * |base| + s.
        class_of: Vec<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

/// Properties of a single element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementClass {
    pub is_zero: bool,
    pub is_unit: bool,
    pub is_nilpotent: bool,
    /// Least k ≥ 1 with a^k = 0.
    pub nilpotency_index: Option<u32>,
    pub is_zero_divisor: bool,
    /// ann(a) = 0.
    pub is_regular: bool,
    pub is_idempotent: bool,
}

#[derive(Clone, Debug)]
pub struct RingClass {
    pub is_field: bool,
    pub is_integral_domain: bool,
    pub is_reduced: bool,
    pub is_von_neumann_regular: bool,
    pub is_boolean: bool,
    pub is_quasi_local: bool,
    /// The unique maximal ideal, when the ring is quasi-local.
    pub maximal_ideal: Option<Ideal>,
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

fn mod_u64(v: &BigInt, n: u64) -> u64 {
    v.mod_floor(&BigInt::from(n)).to_u64().unwrap()
}

fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    (1..n).find(|&x| (a as u128 * x as u128 % n as u128) as u64 == 1 % n)
}

/// Reduce a coefficient vector modulo a monic polynomial over ℤ/n.
fn poly_reduce(mut c: Vec<u64>, n: u64, modulus: &[u64]) -> Vec<u64> {
    let d = modulus.len() - 1;
    for k in (d..c.len()).rev() {
        let lead = c[k] % n;
        if lead != 0 {
            for i in 0..d {
                let sub = (lead as u128 * modulus[i] as u128 % n as u128) as u64;
                c[k - d + i] = (c[k - d + i] + n - sub) % n;
            }
        }
        c[k] = 0;
    }
    c.resize(d, 0);
    c
}

impl Ring {
    /// Build a ring from its recipe.
    pub fn new(spec: &RingSpec) -> Result<Ring> {
        match spec {
            RingSpec::Modular(n) => Ring::modular(*n),
            RingSpec::PolyQuotient { base, modulus } => Ring::poly_quotient(*base, modulus),
            RingSpec::Product(a, b) => Ring::product(&Ring::new(a)?, &Ring::new(b)?),
            RingSpec::Integers => Ok(Ring::integers()),
            RingSpec::Quotient { base, gens } => {
                let base = Ring::new(base)?;
                let gens = gens
                    .iter()
                    .map(|g| base.element(g))
                    .collect::<Result<Vec<_>>>()?;
                let j = Ideal::from_generators(&base, &gens)?;
                Ok(crate::constructions::quotient_ring(&base, &j)?.ring)
            }
            RingSpec::Idealization { base, module } => {
                let base = Ring::new(base)?;
                let m = Module::new(&base, module)?;
                Ok(crate::constructions::idealization(&base, &m)?.ring().clone())
            }
            RingSpec::Localization { base, set } => {
                let base = Ring::new(base)?;
                let elems = set
                    .iter()
                    .map(|g| base.element(g))
                    .collect::<Result<Vec<_>>>()?;
                let s = crate::constructions::MultiplicativeSet::new(&base, &elems)?;
                Ok(crate::constructions::localize(&base, &s)?.ring().clone())
            }
        }
    }

    pub fn integers() -> Ring {
        Ring::wrap(RingSpec::Integers, Backend::Integers)
    }

    pub fn modular(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("Z{n}: modulus must be at least 2")));
        }
        if n as usize > MAX_FINITE_SIZE {
            return Err(Error::TooLarge(n as usize, MAX_FINITE_SIZE));
        }
        let exprs = (0..n).map(ElemExpr::int).collect();
        Ring::from_finite(
            RingSpec::Modular(n),
            FiniteKind::Modular { n },
            n as usize,
            0,
            1,
            |a, b| ((a as u64 + b as u64) % n) as u32,
            |a, b| ((a as u64 * b as u64) % n) as u32,
            exprs,
        )
    }

    /// (ℤ/n)[x]/(f) with `modulus` the coefficients of f, lowest first. The
    /// leading coefficient must be a unit; f is scaled to be monic.
    pub fn poly_quotient(n: u64, modulus: &[u64]) -> Result<Ring> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("Z{n}: modulus must be at least 2")));
        }
        let mut f: Vec<u64> = modulus.iter().map(|c| c % n).collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        if f.len() < 2 {
            return Err(Error::InvalidSpec("polynomial modulus must have degree at least 1".into()));
        }
        let lead = *f.last().unwrap();
        let inv = inverse_mod(lead, n).ok_or_else(|| {
            Error::InvalidSpec(format!("leading coefficient {lead} is not a unit mod {n}"))
        })?;
        for c in f.iter_mut() {
            *c = (*c as u128 * inv as u128 % n as u128) as u64;
        }
        let d = f.len() - 1;
        let size = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        if size > MAX_FINITE_SIZE as u128 {
            return Err(Error::TooLarge(size.min(usize::MAX as u128) as usize, MAX_FINITE_SIZE));
        }
        let size = size as usize;
        let digits = |mut i: u32| -> Vec<u64> {
            (0..d)
                .map(|_| {
                    let c = i as u64 % n;
                    i /= n as u32;
                    c
                })
                .collect()
        };
        let index = |c: &[u64]| -> u32 { c.iter().rev().fold(0u64, |acc, &x| acc * n + x) as u32 };
        let coeffs: Vec<Vec<u64>> = (0..size as u32).map(digits).collect();
        let add = |a: u32, b: u32| {
            let s: Vec<u64> = coeffs[a as usize]
                .iter()
                .zip(&coeffs[b as usize])
                .map(|(x, y)| (x + y) % n)
                .collect();
            index(&s)
        };
        let mul = |a: u32, b: u32| {
            let (x, y) = (&coeffs[a as usize], &coeffs[b as usize]);
            let mut prod = vec![0u64; 2 * d - 1];
            for i in 0..d {
                for j in 0..d {
                    prod[i + j] = (prod[i + j] + x[i] * y[j]) % n;
                }
            }
            index(&poly_reduce(prod, n, &f))
        };
        let exprs = coeffs.iter().map(|c| ElemExpr::poly(c.clone())).collect();
        Ring::from_finite(
            RingSpec::PolyQuotient {
                base: n,
                modulus: f.clone(),
            },
            FiniteKind::Poly { n, modulus: f.clone() },
            size,
            0,
            1,
            add,
            mul,
            exprs,
        )
    }

    pub fn product(left: &Ring, right: &Ring) -> Result<Ring> {
        let (l, r) = (left.require_finite("direct product")?, right.require_finite("direct product")?);
        let rs = r.size as u32;
        let size = l.size * r.size;
        if size > MAX_FINITE_SIZE {
            return Err(Error::TooLarge(size, MAX_FINITE_SIZE));
        }
        let split = |i: u32| (i / rs, i % rs);
        let exprs = (0..size as u32)
            .map(|i| {
                let (a, b) = split(i);
                ElemExpr::pair(l.exprs[a as usize].clone(), r.exprs[b as usize].clone())
            })
            .collect();
        Ring::from_finite(
            RingSpec::Product(Box::new(left.spec().clone()), Box::new(right.spec().clone())),
            FiniteKind::Product {
                left: left.clone(),
                right: right.clone(),
            },
            size,
            l.zero * rs + r.zero,
            l.one * rs + r.one,
            |x, y| {
                let ((a, b), (c, d)) = (split(x), split(y));
                l.add(a, c) * rs + r.add(b, d)
            },
            |x, y| {
                let ((a, b), (c, d)) = (split(x), split(y));
                l.mul(a, c) * rs + r.mul(b, d)
            },
            exprs,
        )
    }

    fn wrap(spec: RingSpec, backend: Backend) -> Ring {
        let text = spec.to_string();
        Ring(Arc::new(RingData {
            tag: fnv1a(&text),
            text,
            spec,
            backend,
        }))
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_finite(
        spec: RingSpec,
        kind: FiniteKind,
        size: usize,
        zero: u32,
        one: u32,
        add: impl Fn(u32, u32) -> u32,
        mul: impl Fn(u32, u32) -> u32,
        exprs: Vec<ElemExpr>,
    ) -> Result<Ring> {
        let t = Tables::build(size, zero, one, add, mul)?;
        let lattice = Lattice::enumerate(&t);
        let nilradical = ElemSet::from_indices(
            size,
            t.elements().filter(|&a| (1..=size).any(|k| t.pow(a, k) == t.zero)),
        );
        let units = ElemSet::from_indices(
            size,
            t.elements().filter(|&a| t.elements().any(|b| t.mul(a, b) == t.one)),
        );
        let zero_divisors = ElemSet::from_indices(
            size,
            t.elements()
                .filter(|&a| t.elements().any(|b| b != t.zero && t.mul(a, b) == t.zero)),
        );
        let labels = exprs.iter().map(|e| e.to_string()).collect();
        Ok(Ring::wrap(
            spec,
            Backend::Finite(FiniteRing {
                t,
                exprs,
                labels,
                kind,
                lattice,
                nilradical,
                units,
                zero_divisors,
                cache: RingCache::default(),
            }),
        ))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    /// Canonical recipe text, as accepted by the DSL parser.
    pub fn recipe(&self) -> &str {
        &self.0.text
    }

    pub(crate) fn tag(&self) -> u64 {
        self.0.tag
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.backend, Backend::Finite(_))
    }

    /// Number of elements, or `None` for ℤ.
    pub fn size(&self) -> Option<usize> {
        self.finite().map(|f| f.size)
    }

    pub(crate) fn finite(&self) -> Option<&FiniteRing> {
        match &self.0.backend {
            Backend::Finite(f) => Some(f),
            Backend::Integers => None,
        }
    }

    pub(crate) fn require_finite(&self, what: &'static str) -> Result<&FiniteRing> {
        self.finite().ok_or(Error::Infinite(what))
    }

    pub fn same_ring(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.tag == other.0.tag && self.0.text == other.0.text)
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::CrossRing(self.0.text.clone(), other.0.text.clone()))
        }
    }

    pub(crate) fn elem(&self, idx: u32) -> Element {
        Element {
            ring: self.clone(),
            value: Value::Index(idx),
        }
    }

    pub(crate) fn label(&self, idx: u32) -> &str {
        &self.finite().expect("finite ring").labels[idx as usize]
    }

    pub(crate) fn index_of(&self, e: &Element) -> Result<u32> {
        self.check_same(&e.ring)?;
        match e.value {
            Value::Index(i) => Ok(i),
            Value::Int(_) => unreachable!("integer element tagged with a finite ring"),
        }
    }

    pub(crate) fn int_of<'a>(&self, e: &'a Element) -> Result<&'a BigInt> {
        self.check_same(&e.ring)?;
        match &e.value {
            Value::Int(v) => Ok(v),
            Value::Index(_) => unreachable!("finite element tagged with ZZ"),
        }
    }

    /// Interpret element notation in this ring.
    pub fn element(&self, e: &ElemExpr) -> Result<Element> {
        match &self.0.backend {
            Backend::Integers => match e.as_int() {
                Some(v) => Ok(Element {
                    ring: self.clone(),
                    value: Value::Int(v.clone()),
                }),
                None => Err(Error::Element(format!("`{e}` is not an integer"))),
            },
            Backend::Finite(f) => Ok(self.elem(f.bind(e)?)),
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        self.element(&crate::dsl::parse_element(text)?)
    }

    /// The image of an integer under ℤ → R.
    pub fn int(&self, v: i64) -> Element {
        self.element(&ElemExpr::int(v)).expect("integers bind in every ring")
    }

    pub fn zero(&self) -> Element {
        self.int(0)
    }

    pub fn one(&self) -> Element {
        self.int(1)
    }

    /// Every element, in the stable index order.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let f = self.require_finite("element enumeration")?;
        Ok(f.elements().map(|i| self.elem(i)).collect())
    }

    pub fn arithmetic(&self, op: ArithOp, a: &Element, b: Option<&Element>) -> Result<Element> {
        let need_b = || b.ok_or_else(|| Error::Element(format!("{op:?} needs two operands")));
        match &self.0.backend {
            Backend::Integers => {
                let x = self.int_of(a)?;
                let v = match op {
                    ArithOp::Neg => -x,
                    ArithOp::Add => x + self.int_of(need_b()?)?,
                    ArithOp::Mul => x * self.int_of(need_b()?)?,
                };
                Ok(Element {
                    ring: self.clone(),
                    value: Value::Int(v),
                })
            }
            Backend::Finite(f) => {
                let x = self.index_of(a)?;
                let v = match op {
                    ArithOp::Neg => f.neg(x),
                    ArithOp::Add => f.add(x, self.index_of(need_b()?)?),
                    ArithOp::Mul => f.mul(x, self.index_of(need_b()?)?),
                };
                Ok(self.elem(v))
            }
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.arithmetic(ArithOp::Add, a, Some(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.arithmetic(ArithOp::Mul, a, Some(b))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.arithmetic(ArithOp::Neg, a, None)
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        self.add(a, &self.neg(b)?)
    }

    pub fn pow(&self, a: &Element, k: u32) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn classify_element(&self, a: &Element) -> Result<ElementClass> {
        match &self.0.backend {
            Backend::Integers => {
                let v = self.int_of(a)?;
                let zero = v.is_zero();
                Ok(ElementClass {
                    is_zero: zero,
                    is_unit: v.abs().is_one(),
                    is_nilpotent: zero,
                    nilpotency_index: zero.then_some(1),
                    is_zero_divisor: zero,
                    is_regular: !zero,
                    is_idempotent: zero || v.is_one(),
                })
            }
            Backend::Finite(f) => {
                let x = self.index_of(a)?;
                let nilpotency_index = (1..=f.size as u32).find(|&k| f.pow(x, k as usize) == f.zero);
                let zd = f.zero_divisors.contains(x);
                Ok(ElementClass {
                    is_zero: x == f.zero,
                    is_unit: f.units.contains(x),
                    is_nilpotent: nilpotency_index.is_some(),
                    nilpotency_index,
                    is_zero_divisor: zd,
                    is_regular: !zd,
                    is_idempotent: f.mul(x, x) == x,
                })
            }
        }
    }

    pub fn classify(&self) -> RingClass {
        let f = match &self.0.backend {
            Backend::Integers => {
                return RingClass {
                    is_field: false,
                    is_integral_domain: true,
                    is_reduced: true,
                    is_von_neumann_regular: false,
                    is_boolean: false,
                    is_quasi_local: false,
                    maximal_ideal: None,
                }
            }
            Backend::Finite(f) => f,
        };
        let nonzero = || f.elements().filter(|&a| a != f.zero);
        let is_field = nonzero().all(|a| f.units.contains(a));
        let is_integral_domain = nonzero().all(|a| !f.zero_divisors.contains(a));
        let is_reduced = f.nilradical.len() == 1;
        let is_von_neumann_regular = f
            .elements()
            .all(|a| f.elements().any(|x| f.mul(f.mul(a, a), x) == a));
        let is_boolean = f.elements().all(|a| f.mul(a, a) == a);
        let maximal = f.lattice.maximal();
        let maximal_ideal = (maximal.len() == 1).then(|| Ideal::from_lattice(self, maximal[0]));
        RingClass {
            is_field,
            is_integral_domain,
            is_reduced,
            is_von_neumann_regular,
            is_boolean,
            is_quasi_local: maximal_ideal.is_some(),
            maximal_ideal,
        }
    }
}

impl FiniteRing {
    /// Additive order of 1.
    fn characteristic(&self) -> u64 {
        let mut acc = self.one;
        let mut c = 1u64;
        while acc != self.zero {
            acc = self.add(acc, self.one);
            c += 1;
        }
        c
    }

    fn from_bigint(&self, v: &BigInt) -> u32 {
        let k = mod_u64(v, self.characteristic());
        let mut acc = self.zero;
        for _ in 0..k {
            acc = self.add(acc, self.one);
        }
        acc
    }

    pub(crate) fn bind(&self, e: &ElemExpr) -> Result<u32> {
        match &self.kind {
            FiniteKind::Modular { n } => match e.as_int() {
                Some(v) => Ok(mod_u64(v, *n) as u32),
                None => Err(Error::Element(format!("`{e}` is not a residue mod {n}"))),
            },
            FiniteKind::Poly { n, modulus } => match e {
                ElemExpr::Poly(c) => {
                    let mut cs: Vec<u64> = c.iter().map(|v| mod_u64(v, *n)).collect();
                    let d = modulus.len() - 1;
                    if cs.len() < d {
                        cs.resize(d, 0);
                    }
                    let r = poly_reduce(cs, *n, modulus);
                    Ok(r.iter().rev().fold(0u64, |acc, &x| acc * n + x) as u32)
                }
                _ => Err(Error::Element(format!("`{e}` is not a polynomial"))),
            },
            FiniteKind::Product { left, right } => match e {
                ElemExpr::Pair(a, b) => {
                    let (l, r) = (left.finite().unwrap(), right.finite().unwrap());
                    Ok(l.bind(a)? * r.size as u32 + r.bind(b)?)
                }
                _ => match e.as_int() {
                    Some(v) => Ok(self.from_bigint(v)),
                    None => Err(Error::Element(format!("`{e}` is not a pair"))),
                },
            },
            FiniteKind::Idealization { base, module } => match e {
                ElemExpr::Pair(a, b) => {
                    let r = base.finite().unwrap().bind(a)?;
                    Ok(r * module.size() as u32 + module.bind(b)?)
                }
                _ => match e.as_int() {
                    Some(v) => Ok(self.from_bigint(v)),
                    None => Err(Error::Element(format!("`{e}` is not a pair (r,m)"))),
                },
            },
            FiniteKind::Quotient { base, class_of, .. } => {
                Ok(class_of[base.finite().unwrap().bind(e)? as usize])
            }
            FiniteKind::Localization {
                base, set, class_of, ..
            } => {
                let b = base.finite().unwrap();
                let (r, s) = match e {
                    ElemExpr::Frac(r, s) => (b.bind(r)?, b.bind(s)?),
                    other => (b.bind(other)?, b.one),
                };
                if !set.contains(s) {
                    return Err(Error::Element(format!(
                        "denominator `{}` is not in the multiplicative set",
                        b.labels[s as usize]
                    )));
                }
                Ok(class_of[r as usize * b.size + s as usize])
            }
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.text)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Value {
    Index(u32),
    Int(BigInt),
}

/// An element of a specific ring, in canonical form.
#[derive(Clone)]
pub struct Element {
    ring: Ring,
    pub(crate) value: Value,
}

impl Element {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Position in the ring's enumeration order (finite rings only).
    pub fn index(&self) -> Option<u32> {
        match self.value {
            Value::Index(i) => Some(i),
            Value::Int(_) => None,
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match &self.value {
            Value::Int(v) => Some(v),
            Value::Index(_) => None,
        }
    }

    pub fn expr(&self) -> ElemExpr {
        match &self.value {
            Value::Int(v) => ElemExpr::int(v.clone()),
            Value::Index(i) => self.ring.finite().unwrap().exprs[*i as usize].clone(),
        }
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.ring.same_ring(&other.ring)
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.tag().hash(state);
        self.value.hash(state);
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(v) => write!(f, "{v}"),
            Value::Index(i) => f.write_str(self.ring.label(*i)),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_arithmetic() {
        let z6 = Ring::modular(6).unwrap();
        assert_eq!(z6.size(), Some(6));
        let (two, three) = (z6.int(2), z6.int(3));
        assert_eq!(z6.add(&two, &three).unwrap(), z6.int(5));
        assert_eq!(z6.mul(&two, &three).unwrap(), z6.int(0));
        assert_eq!(z6.neg(&two).unwrap(), z6.int(4));
    }

    #[test]
    fn invalid_specs() {
        assert!(matches!(Ring::modular(1), Err(Error::InvalidSpec(_))));
        assert!(matches!(Ring::poly_quotient(4, &[1, 0, 2]), Err(Error::InvalidSpec(_))));
        assert!(matches!(Ring::poly_quotient(4, &[3]), Err(Error::InvalidSpec(_))));
        // A unit leading coefficient is scaled away.
        let r = Ring::poly_quotient(5, &[1, 0, 2]).unwrap();
        assert_eq!(r.recipe(), "Z5[x]/(x^2+3)");
    }

    #[test]
    fn poly_quotient_example_ring() {
        let r = Ring::poly_quotient(4, &[0, 0, 0, 1]).unwrap();
        assert_eq!(r.size(), Some(64));
        assert_eq!(r.recipe(), "Z4[x]/(x^3)");
        let a = r.parse_element("1+x").unwrap();
        let b = r.parse_element("1+3x+x^2").unwrap();
        assert_eq!(r.mul(&a, &b).unwrap(), r.one());
        assert_eq!(r.parse_element("x^3").unwrap(), r.zero());
        assert_eq!(r.parse_element("x^2+x+1").unwrap().to_string(), "1+x+x^2");
    }

    #[test]
    fn cross_ring_rejected() {
        let z4 = Ring::modular(4).unwrap();
        let z6 = Ring::modular(6).unwrap();
        assert!(matches!(z4.add(&z4.one(), &z6.one()), Err(Error::CrossRing(..))));
    }

    #[test]
    fn integers_backend() {
        let zz = Ring::integers();
        assert_eq!(zz.size(), None);
        assert!(matches!(zz.elements(), Err(Error::Infinite(_))));
        let seven = zz.int(7);
        let c = zz.classify_element(&seven).unwrap();
        assert!(c.is_regular && !c.is_unit && !c.is_zero_divisor);
        let big = zz.parse_element("123456789012345678901234567890").unwrap();
        assert_eq!(zz.mul(&big, &zz.int(0)).unwrap(), zz.zero());
    }

    #[test]
    fn element_classes() {
        let z8 = Ring::modular(8).unwrap();
        let c = z8.classify_element(&z8.int(2)).unwrap();
        assert!(c.is_nilpotent && c.is_zero_divisor && !c.is_unit);
        assert_eq!(c.nilpotency_index, Some(3));
        let z6 = Ring::modular(6).unwrap();
        let c = z6.classify_element(&z6.int(5)).unwrap();
        assert!(c.is_unit && c.is_regular);
    }

    #[test]
    fn ring_classes() {
        let z8 = Ring::modular(8).unwrap().classify();
        assert!(z8.is_quasi_local && !z8.is_reduced && !z8.is_field);
        let m = z8.maximal_ideal.unwrap();
        assert_eq!(m.len(), Some(4));
        let r = Ring::new(&RingSpec::Product(
            Box::new(RingSpec::Modular(2)),
            Box::new(RingSpec::Modular(2)),
        ))
        .unwrap()
        .classify();
        assert!(r.is_von_neumann_regular && r.is_boolean && !r.is_integral_domain);
        assert!(Ring::modular(7).unwrap().classify().is_field);
        for (p, f) in [(2u64, vec![1u64, 1, 1]), (3, vec![1, 0, 1])] {
            assert!(Ring::poly_quotient(p, &f).unwrap().classify().is_field);
        }
    }
}
