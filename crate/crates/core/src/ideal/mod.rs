//! Ideals, their lattice, and the derived operators: sum, product,
//! intersection, colon and radical.

pub(crate) mod lattice;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::integers;
use crate::ring::{Element, FiniteRing, Ring};

/// An ideal of a specific ring.
///
/// Finite-ring ideals are identified by their position in the ring's ideal
/// lattice; ideals of ℤ by their nonnegative generator.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    body: Body,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Body {
    Lattice(usize),
    Integer(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersect,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealClass {
    pub is_proper: bool,
    pub is_prime: bool,
    pub is_maximal: bool,
    pub is_primary: bool,
    pub is_superfluous: bool,
}

/// A set of elements that may be infinite on ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementSet {
    Listed(Vec<Element>),
    /// ℤ ∖ {0}.
    NonZeroIntegers,
    /// Integers sharing a prime factor with n (n ≥ 2).
    SharingFactorWith(u64),
    /// dℤ for d ≥ 1.
    MultiplesOf(u64),
}

impl ElementSet {
    pub fn contains(&self, a: &Element) -> bool {
        match self {
            ElementSet::Listed(v) => v.contains(a),
            ElementSet::NonZeroIntegers => a.as_integer().is_some_and(|v| !v.is_zero()),
            ElementSet::MultiplesOf(d) => a.as_integer().is_some_and(|v| (v % BigInt::from(*d)).is_zero()),
            ElementSet::SharingFactorWith(n) => a.as_integer().is_some_and(|v| {
                let m = (v.abs() % BigInt::from(*n)).to_u64().unwrap();
                integers::gcd(m, *n) != 1
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpecialSets {
    pub nilradical: Ideal,
    pub jacobson: Ideal,
    pub zero_divisors: ElementSet,
    pub regular_elements: ElementSet,
    /// Z_I(R) = {r : rs ∈ I for some s ∉ I}, when an ideal was supplied.
    pub z_i: Option<ElementSet>,
}

fn to_u64(v: &BigInt) -> Result<u64> {
    v.abs().to_u64().ok_or(Error::Overflow("ideal generator"))
}

// Set-level operators shared by the typed API and the exhaustive checkers.
impl FiniteRing {
    pub(crate) fn radical_set(&self, i: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.size,
            self.elements().filter(|&r| {
                let mut p = r;
                for _ in 0..self.size {
                    if i.contains(p) {
                        return true;
                    }
                    p = self.mul(p, r);
                }
                false
            }),
        )
    }

    pub(crate) fn colon_elem_set(&self, i: &ElemSet, x: u32) -> ElemSet {
        ElemSet::from_indices(self.size, self.elements().filter(|&r| i.contains(self.mul(r, x))))
    }

    pub(crate) fn colon_set(&self, i: &ElemSet, p: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.size,
            self.elements().filter(|&r| p.iter().all(|x| i.contains(self.mul(r, x)))),
        )
    }

    /// Lattice index of the colon ideal (I_i : x).
    pub(crate) fn colon_idx(&self, i: usize, x: u32) -> usize {
        self.lattice
            .find(&self.colon_elem_set(&self.lattice.sets[i], x))
            .expect("colon of an ideal is an ideal")
    }

    pub(crate) fn radical_idx(&self, i: usize) -> usize {
        self.lattice
            .find(&self.radical_set(&self.lattice.sets[i]))
            .expect("radical of an ideal is an ideal")
    }

    pub(crate) fn sum_idx(&self, i: usize, j: usize) -> usize {
        let s = self.sum_set(&self.lattice.sets[i], &self.lattice.sets[j]);
        self.lattice.find(&s).expect("sum of ideals is an ideal")
    }

    pub(crate) fn meet_idx(&self, i: usize, j: usize) -> usize {
        let s = self.lattice.sets[i].intersection(&self.lattice.sets[j]);
        self.lattice.find(&s).expect("intersection of ideals is an ideal")
    }

    pub(crate) fn product_idx(&self, i: usize, j: usize) -> usize {
        let (gi, gj) = (&self.lattice.gens[i], &self.lattice.gens[j]);
        let s = self.closure(gi.iter().flat_map(|&a| gj.iter().map(move |&b| self.mul(a, b))));
        self.lattice.find(&s).expect("product of ideals is an ideal")
    }

    /// Cached I_i · I_j.
    pub(crate) fn product_of(&self, i: usize, j: usize) -> usize {
        let n = self.lattice.len();
        let t = self.cache.products.get_or_init(|| {
            (0..n * n).map(|k| self.product_idx(k / n, k % n)).collect()
        });
        t[i * n + j]
    }

    /// Cached (I_i : x).
    pub(crate) fn colon_of(&self, i: usize, x: u32) -> usize {
        let t = self.cache.colons.get_or_init(|| {
            (0..self.lattice.len() * self.size)
                .map(|k| self.colon_idx(k / self.size, (k % self.size) as u32))
                .collect()
        });
        t[i * self.size + x as usize]
    }

    /// Cached √I_i.
    pub(crate) fn radical_of(&self, i: usize) -> usize {
        let t = self
            .cache
            .radicals
            .get_or_init(|| (0..self.lattice.len()).map(|k| self.radical_idx(k)).collect());
        t[i]
    }

    pub(crate) fn nil_idx(&self) -> usize {
        self.lattice.find(&self.nilradical).expect("nilradical is an ideal")
    }

    pub(crate) fn is_prime_idx(&self, i: usize) -> bool {
        let s = &self.lattice.sets[i];
        i != self.lattice.top()
            && self.elements().all(|a| {
                s.contains(a) || self.elements().all(|b| !s.contains(self.mul(a, b)) || s.contains(b))
            })
    }

    pub(crate) fn is_primary_idx(&self, i: usize) -> bool {
        let s = &self.lattice.sets[i];
        let rad = self.radical_set(s);
        i != self.lattice.top()
            && self.elements().all(|a| {
                s.contains(a) || self.elements().all(|b| !s.contains(self.mul(a, b)) || rad.contains(b))
            })
    }

    pub(crate) fn is_superfluous_idx(&self, i: usize) -> bool {
        let top = self.lattice.top();
        self.lattice.proper().all(|j| self.sum_idx(i, j) != top)
    }

    /// Z_I(R) from its set-builder definition.
    pub(crate) fn z_set(&self, i: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.size,
            self.elements()
                .filter(|&r| i.complement_iter().any(|s| i.contains(self.mul(r, s)))),
        )
    }
}

impl Ideal {
    pub(crate) fn from_lattice(ring: &Ring, idx: usize) -> Ideal {
        Ideal {
            ring: ring.clone(),
            body: Body::Lattice(idx),
        }
    }

    pub(crate) fn from_set(ring: &Ring, set: &ElemSet) -> Result<Ideal> {
        let f = ring.require_finite("element-set ideals")?;
        let idx = f
            .lattice
            .find(set)
            .ok_or_else(|| Error::NotAnIdeal(format!("subset {set:?} of {ring} is not an ideal")))?;
        Ok(Ideal::from_lattice(ring, idx))
    }

    pub fn integer(n: u64) -> Ideal {
        Ideal {
            ring: Ring::integers(),
            body: Body::Integer(n),
        }
    }

    /// Smallest ideal containing `gens`.
    pub fn from_generators(ring: &Ring, gens: &[Element]) -> Result<Ideal> {
        match ring.finite() {
            None => {
                let mut g = 0u64;
                for e in gens {
                    g = integers::gcd(g, to_u64(ring.int_of(e)?)?);
                }
                Ok(Ideal {
                    ring: ring.clone(),
                    body: Body::Integer(g),
                })
            }
            Some(f) => {
                let idx = gens
                    .iter()
                    .map(|e| ring.index_of(e))
                    .collect::<Result<Vec<_>>>()?;
                Ideal::from_set(ring, &f.closure(idx))
            }
        }
    }

    /// The ideal whose members are exactly `elems`; fails if they do not form one.
    pub fn from_elements(ring: &Ring, elems: &[Element]) -> Result<Ideal> {
        let f = ring.require_finite("element-set ideals")?;
        let idx = elems
            .iter()
            .map(|e| ring.index_of(e))
            .collect::<Result<Vec<_>>>()?;
        Ideal::from_set(ring, &ElemSet::from_indices(f.size, idx))
    }

    pub fn principal(a: &Element) -> Result<Ideal> {
        Ideal::from_generators(a.ring(), std::slice::from_ref(a))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::from_generators(ring, &[]).expect("zero ideal")
    }

    pub fn whole(ring: &Ring) -> Ideal {
        Ideal::principal(&ring.one()).expect("unit ideal")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn idx(&self) -> usize {
        match self.body {
            Body::Lattice(i) => i,
            Body::Integer(_) => unreachable!("ideal of ZZ has no lattice index"),
        }
    }

    pub(crate) fn set(&self) -> &ElemSet {
        &self.ring.finite().expect("finite ring").lattice.sets[self.idx()]
    }

    /// n for the ideal nℤ of the integers.
    pub fn integer_generator(&self) -> Option<u64> {
        match self.body {
            Body::Integer(n) => Some(n),
            Body::Lattice(_) => None,
        }
    }

    /// A generator list for this ideal (canonical per ideal, not per input).
    pub fn generators(&self) -> Vec<Element> {
        match self.body {
            Body::Integer(n) => vec![self.ring.element(&crate::ring::ElemExpr::int(n)).unwrap()],
            Body::Lattice(i) => self.ring.finite().unwrap().lattice.gens[i]
                .iter()
                .map(|&g| self.ring.elem(g))
                .collect(),
        }
    }

    pub fn elements(&self) -> Result<Vec<Element>> {
        self.ring.require_finite("ideal enumeration")?;
        Ok(self.set().iter().map(|i| self.ring.elem(i)).collect())
    }

    /// Number of elements, `None` for nonzero ideals of ℤ.
    pub fn len(&self) -> Option<usize> {
        match self.body {
            Body::Integer(0) => Some(1),
            Body::Integer(_) => None,
            Body::Lattice(_) => Some(self.set().len()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self.body {
            Body::Integer(n) => n == 0,
            Body::Lattice(i) => i == 0,
        }
    }

    pub fn is_proper(&self) -> bool {
        match self.body {
            Body::Integer(n) => n != 1,
            Body::Lattice(i) => i != self.ring.finite().unwrap().lattice.top(),
        }
    }

    pub fn contains(&self, a: &Element) -> Result<bool> {
        match self.body {
            Body::Integer(n) => {
                let v = self.ring.int_of(a)?;
                Ok(if n == 0 { v.is_zero() } else { (v % BigInt::from(n)).is_zero() })
            }
            Body::Lattice(_) => Ok(self.set().contains(self.ring.index_of(a)?)),
        }
    }

    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(match (self.body, other.body) {
            (Body::Integer(n), Body::Integer(m)) => m != 0 && n % m == 0 || n == 0,
            (Body::Lattice(i), Body::Lattice(j)) => self.ring.finite().unwrap().lattice.le(i, j),
            _ => unreachable!(),
        })
    }

    fn with(&self, body: Body) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            body,
        }
    }

    pub fn combine(&self, op: IdealOp, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        match (self.body, other.body) {
            (Body::Integer(n), Body::Integer(m)) => Ok(self.with(Body::Integer(match op {
                IdealOp::Sum => integers::gcd(n, m),
                IdealOp::Product => n.checked_mul(m).ok_or(Error::Overflow("ideal product"))?,
                IdealOp::Intersect => integers::lcm(n, m)?,
            }))),
            (Body::Lattice(i), Body::Lattice(j)) => {
                let f = self.ring.finite().unwrap();
                Ok(self.with(Body::Lattice(match op {
                    IdealOp::Sum => f.sum_idx(i, j),
                    IdealOp::Product => f.product_idx(i, j),
                    IdealOp::Intersect => f.meet_idx(i, j),
                })))
            }
            _ => unreachable!(),
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.combine(IdealOp::Sum, other)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.combine(IdealOp::Product, other)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.combine(IdealOp::Intersect, other)
    }

    /// (I : x) = {r : rx ∈ I}.
    pub fn colon_element(&self, x: &Element) -> Result<Ideal> {
        match self.body {
            Body::Integer(n) => {
                let m = to_u64(self.ring.int_of(x)?)?;
                Ok(self.with(Body::Integer(integers::colon(n, m))))
            }
            Body::Lattice(i) => {
                let f = self.ring.finite().unwrap();
                Ok(self.with(Body::Lattice(f.colon_idx(i, self.ring.index_of(x)?))))
            }
        }
    }

    /// (I : P) = {r : rP ⊆ I}.
    pub fn colon_ideal(&self, p: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&p.ring)?;
        match (self.body, p.body) {
            (Body::Integer(n), Body::Integer(m)) => Ok(self.with(Body::Integer(integers::colon(n, m)))),
            (Body::Lattice(_), Body::Lattice(_)) => {
                let f = self.ring.finite().unwrap();
                Ideal::from_set(&self.ring, &f.colon_set(self.set(), p.set()))
            }
            _ => unreachable!(),
        }
    }

    pub fn radical(&self) -> Ideal {
        match self.body {
            Body::Integer(n) => self.with(Body::Integer(integers::radical(n))),
            Body::Lattice(i) => self.with(Body::Lattice(self.ring.finite().unwrap().radical_idx(i))),
        }
    }

    pub fn classify(&self) -> IdealClass {
        match self.body {
            Body::Integer(n) => IdealClass {
                is_proper: n != 1,
                is_prime: n == 0 || integers::is_prime(n),
                is_maximal: integers::is_prime(n),
                is_primary: n == 0 || integers::is_prime_power(n),
                is_superfluous: n == 0,
            },
            Body::Lattice(i) => {
                let f = self.ring.finite().unwrap();
                IdealClass {
                    is_proper: i != f.lattice.top(),
                    is_prime: f.is_prime_idx(i),
                    is_maximal: f.lattice.maximal().contains(&i),
                    is_primary: f.is_primary_idx(i),
                    is_superfluous: f.is_superfluous_idx(i),
                }
            }
        }
    }
}

/// The complete ideal lattice, smallest ideals first.
pub fn enumerate_ideals(ring: &Ring) -> Result<Vec<Ideal>> {
    let f = ring.require_finite("ideal enumeration")?;
    Ok((0..f.lattice.len()).map(|i| Ideal::from_lattice(ring, i)).collect())
}

/// Nilradical, Jacobson radical, zero divisors, regular elements and
/// optionally Z_I(R).
pub fn special_sets(ring: &Ring, ideal: Option<&Ideal>) -> Result<SpecialSets> {
    if let Some(i) = ideal {
        ring.check_same(i.ring())?;
    }
    match ring.finite() {
        None => Ok(SpecialSets {
            nilradical: Ideal::zero(ring),
            jacobson: Ideal::zero(ring),
            zero_divisors: ElementSet::Listed(vec![ring.zero()]),
            regular_elements: ElementSet::NonZeroIntegers,
            z_i: ideal.map(|i| match i.integer_generator().unwrap() {
                0 => ElementSet::Listed(vec![ring.zero()]),
                1 => ElementSet::Listed(vec![]),
                n => ElementSet::SharingFactorWith(n),
            }),
        }),
        Some(f) => {
            let list = |s: &ElemSet| ElementSet::Listed(s.iter().map(|i| ring.elem(i)).collect());
            let maximal = f.lattice.maximal();
            let jac = maximal
                .iter()
                .fold(f.lattice.top(), |acc, &m| f.meet_idx(acc, m));
            let regular = ElemSet::from_indices(f.size, f.zero_divisors.complement_iter());
            Ok(SpecialSets {
                nilradical: Ideal::from_lattice(ring, f.nil_idx()),
                jacobson: Ideal::from_lattice(ring, jac),
                zero_divisors: list(&f.zero_divisors),
                regular_elements: list(&regular),
                z_i: ideal.map(|i| list(&f.z_set(i.set()))),
            })
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.body == other.body && self.ring.same_ring(&other.ring)
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        if gens.is_empty() {
            f.pad("(0)")
        } else {
            f.pad(&format!("({})", gens.join(",")))
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Ring {
        Ring::modular(n).unwrap()
    }

    fn ideal(r: &Ring, gens: &[i64]) -> Ideal {
        let g: Vec<Element> = gens.iter().map(|&v| r.int(v)).collect();
        Ideal::from_generators(r, &g).unwrap()
    }

    fn members(i: &Ideal) -> Vec<String> {
        i.elements().unwrap().iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn generators_close_to_gcd() {
        let r = z(12);
        assert_eq!(members(&ideal(&r, &[4, 6])), ["0", "2", "4", "6", "8", "10"]);
        assert!(ideal(&r, &[]).is_zero());
        let p = Ring::poly_quotient(4, &[0, 0, 0, 1]).unwrap();
        let g = [p.int(2), p.parse_element("x").unwrap()];
        assert_eq!(Ideal::from_generators(&p, &g).unwrap().len(), Some(32));
    }

    #[test]
    fn membership() {
        let r = z(12);
        assert!(ideal(&r, &[2]).contains(&r.int(8)).unwrap());
        assert!(ideal(&r, &[0]).contains(&r.int(0)).unwrap());
        let zz = Ring::integers();
        assert!(!Ideal::integer(12).contains(&zz.int(8)).unwrap());
    }

    #[test]
    fn integer_closed_forms() {
        let (a, b) = (Ideal::integer(4), Ideal::integer(6));
        assert_eq!(a.sum(&b).unwrap().integer_generator(), Some(2));
        assert_eq!(a.intersect(&b).unwrap().integer_generator(), Some(12));
        assert_eq!(a.product(&b).unwrap().integer_generator(), Some(24));
        let zz = Ring::integers();
        assert_eq!(Ideal::integer(12).colon_element(&zz.int(8)).unwrap().integer_generator(), Some(3));
        assert_eq!(Ideal::integer(12).radical().integer_generator(), Some(6));
    }

    #[test]
    fn combine_and_colon() {
        let r = z(12);
        let m = ideal(&r, &[2]).intersect(&ideal(&r, &[3])).unwrap();
        assert_eq!(m, ideal(&r, &[6]));
        let i = ideal(&r, &[4]);
        assert_eq!(i.sum(&Ideal::zero(&r)).unwrap(), i);
        assert_eq!(i.colon_element(&r.one()).unwrap(), i);
        let r8 = z(8);
        assert_eq!(ideal(&r8, &[4]).colon_element(&r8.int(2)).unwrap(), ideal(&r8, &[2]));
    }

    #[test]
    fn radicals() {
        let r8 = z(8);
        assert_eq!(Ideal::zero(&r8).radical(), ideal(&r8, &[2]));
        let f = z(7);
        assert!(Ideal::zero(&f).radical().is_zero());
    }

    #[test]
    fn lattices() {
        let l12 = enumerate_ideals(&z(12)).unwrap();
        let shown: Vec<String> = l12.iter().map(|i| i.to_string()).collect();
        assert_eq!(shown, ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
        assert_eq!(enumerate_ideals(&z(8)).unwrap().len(), 4);
        assert_eq!(enumerate_ideals(&z(13)).unwrap().len(), 2);
        assert!(enumerate_ideals(&Ring::integers()).is_err());
    }

    #[test]
    fn ideal_classes() {
        let r = z(12);
        let c = ideal(&r, &[3]).classify();
        assert!(c.is_prime && c.is_maximal);
        assert!(!ideal(&r, &[6]).classify().is_prime);
        let r8 = z(8);
        let c = ideal(&r8, &[4]).classify();
        assert!(c.is_primary && !c.is_prime && c.is_superfluous);
        let zz = Ideal::integer(0).classify();
        assert!(zz.is_prime && zz.is_superfluous && !zz.is_maximal);
    }

    #[test]
    fn special_set_examples() {
        let r = z(12);
        let s = special_sets(&r, None).unwrap();
        assert_eq!(s.nilradical, ideal(&r, &[6]));
        assert_eq!(s.jacobson, ideal(&r, &[6]));
        let r6 = z(6);
        let s = special_sets(&r6, Some(&Ideal::zero(&r6))).unwrap();
        let want: Vec<Element> = [0, 2, 3, 4].iter().map(|&v| r6.int(v)).collect();
        assert_eq!(s.z_i, Some(ElementSet::Listed(want)));
        let f = z(5);
        let s = special_sets(&f, Some(&Ideal::zero(&f))).unwrap();
        assert_eq!(s.zero_divisors, ElementSet::Listed(vec![f.zero()]));
        assert_eq!(s.z_i, Some(ElementSet::Listed(vec![f.zero()])));
    }
}
