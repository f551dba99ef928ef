//! The ideal classes: n-ideals, δ-primary ideals, δ-n-ideals (four
//! equivalent tests) and quasi n-ideals.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::Expansion;
use crate::ideal::{ElementSet, Ideal};
use crate::ring::{integers, Element, FiniteRing, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaNMethod {
    /// ab ∈ I, a ∉ √0 ⇒ b ∈ δ(I).
    Definition,
    /// (I:a) ⊆ √0 for every a ∉ δ(I).
    ColonCriterion,
    /// aJ ⊆ I ⇒ a ∈ √0 or J ⊆ δ(I).
    ElementIdeal,
    /// JK ⊆ I ⇒ J ⊆ √0 or K ⊆ δ(I).
    IdealPairs,
}

impl DeltaNMethod {
    pub const ALL: [DeltaNMethod; 4] = [
        DeltaNMethod::Definition,
        DeltaNMethod::ColonCriterion,
        DeltaNMethod::ElementIdeal,
        DeltaNMethod::IdealPairs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DeltaNMethod::Definition => "definition",
            DeltaNMethod::ColonCriterion => "colon_criterion",
            DeltaNMethod::ElementIdeal => "element_ideal",
            DeltaNMethod::IdealPairs => "ideal_pairs",
        }
    }
}

impl fmt::Display for DeltaNMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeltaNMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DeltaNMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown method `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    pub all: Vec<Ideal>,
    pub maximal_members: Vec<Ideal>,
}

fn guard(i: &Ideal) -> Result<()> {
    if i.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperIdeal(format!(
            "{i} is the whole ring {}; the classes are defined for proper ideals only",
            i.ring()
        )))
    }
}

/// (a, b) with ab ∈ I, a outside `skip_a`, b outside `target`.
fn first_pair(
    f: &FiniteRing,
    i: usize,
    skip_a: &crate::elemset::ElemSet,
    target: &crate::elemset::ElemSet,
) -> Option<(u32, u32)> {
    let set = &f.lattice.sets[i];
    skip_a
        .complement_iter()
        .find_map(|a| target.complement_iter().find(|&b| set.contains(f.mul(a, b))).map(|b| (a, b)))
}

fn to_elems(r: &Ring, p: Option<(u32, u32)>) -> Option<(Element, Element)> {
    p.map(|(a, b)| (r.elem(a), r.elem(b)))
}

/// ℤ: δ(nℤ) as a generator.
fn int_delta(delta: &Expansion, n: u64) -> Result<u64> {
    Ok(delta.apply(&Ideal::integer(n))?.integer_generator().unwrap())
}

fn int_pair(r: &Ring, n: u64) -> (Element, Element) {
    (r.element(&crate::ring::ElemExpr::int(n)).unwrap(), r.one())
}

/// A pair (a, b) with ab ∈ I and a ∉ I but b ∉ δ(I), if one exists.
pub fn delta_primary_witness(i: &Ideal, delta: &Expansion) -> Result<Option<(Element, Element)>> {
    guard(i)?;
    i.ring().check_same(delta.ring())?;
    let r = i.ring();
    match r.finite() {
        Some(f) => {
            let w = first_pair(f, i.idx(), i.set(), delta.apply(i)?.set());
            Ok(to_elems(r, w))
        }
        None => {
            let n = i.integer_generator().unwrap();
            if n == 0 {
                return Ok(None);
            }
            let d = int_delta(delta, n)?;
            if d == 1 {
                return Ok(None);
            }
            let zz = |v: u64| r.element(&crate::ring::ElemExpr::int(v)).unwrap();
            let ps = integers::prime_factors(n);
            let p = ps[0];
            let k = {
                let (mut k, mut m) = (0u32, n);
                while m % p == 0 {
                    m /= p;
                    k += 1;
                }
                k
            };
            if ps.len() == 1 {
                // n = p^k: the conclusion needs b = p ∈ dℤ.
                if p % d == 0 {
                    return Ok(None);
                }
                return Ok(Some((zz(p.pow(k - 1)), zz(p))));
            }
            let pk = p.pow(k);
            let m = n / pk;
            // a = p^k, b = m and a = m, b = p^k both qualify; one of b lies outside dℤ.
            Ok(Some(if m % d != 0 { (zz(pk), zz(m)) } else { (zz(m), zz(pk)) }))
        }
    }
}

/// ab ∈ I and a ∉ I ⇒ b ∈ δ(I).
pub fn is_delta_primary(i: &Ideal, delta: &Expansion) -> Result<bool> {
    Ok(delta_primary_witness(i, delta)?.is_none())
}

/// A pair (a, b) with ab ∈ I, a ∉ √0 and b ∉ δ(I), if one exists.
pub fn delta_n_witness(i: &Ideal, delta: &Expansion) -> Result<Option<(Element, Element)>> {
    guard(i)?;
    i.ring().check_same(delta.ring())?;
    let r = i.ring();
    match r.finite() {
        Some(f) => Ok(to_elems(r, first_pair(f, i.idx(), &f.nilradical, delta.apply(i)?.set()))),
        None => {
            let n = i.integer_generator().unwrap();
            // n·1 ∈ nℤ with n ∉ √0 = 0 forces 1 ∈ δ(nℤ).
            if n == 0 || int_delta(delta, n)? == 1 {
                Ok(None)
            } else {
                Ok(Some(int_pair(r, n)))
            }
        }
    }
}

/// ab ∈ I ⇒ a ∈ √0 or b ∈ I.
pub fn is_n_ideal(i: &Ideal) -> Result<bool> {
    Ok(n_ideal_witness(i)?.is_none())
}

pub fn n_ideal_witness(i: &Ideal) -> Result<Option<(Element, Element)>> {
    delta_n_witness(i, &Expansion::delta0(i.ring()))
}

pub fn is_delta_n_ideal(i: &Ideal, delta: &Expansion, method: DeltaNMethod) -> Result<bool> {
    guard(i)?;
    i.ring().check_same(delta.ring())?;
    let f = match i.ring().finite() {
        Some(f) => f,
        None => return Ok(delta_n_witness(i, delta)?.is_none()),
    };
    let ii = i.idx();
    let d = delta.at(ii);
    Ok(decide(f, ii, d, method))
}

/// The four tests on lattice indices: I = I_ii and δ(I) = I_d.
pub(crate) fn decide(f: &FiniteRing, ii: usize, d: usize, method: DeltaNMethod) -> bool {
    let lat = &f.lattice;
    let nil = f.nil_idx();
    let (iset, dset) = (&lat.sets[ii], &lat.sets[d]);
    match method {
        DeltaNMethod::Definition => first_pair(f, ii, &f.nilradical, dset).is_none(),
        DeltaNMethod::ColonCriterion => dset.complement_iter().all(|a| lat.le(f.colon_of(ii, a), nil)),
        DeltaNMethod::ElementIdeal => f.elements().all(|a| {
            f.nilradical.contains(a)
                || (0..lat.len()).all(|j| {
                    lat.le(j, d) || !lat.gens[j].iter().all(|&g| iset.contains(f.mul(a, g)))
                })
        }),
        DeltaNMethod::IdealPairs => (0..lat.len()).all(|j| {
            lat.le(j, nil) || (0..lat.len()).all(|k| lat.le(k, d) || !lat.le(f.product_of(j, k), ii))
        }),
    }
}

/// δ-primary on lattice indices: I = I_ii and δ(I) = I_d.
pub(crate) fn decide_primary(f: &FiniteRing, ii: usize, d: usize) -> bool {
    first_pair(f, ii, &f.lattice.sets[ii], &f.lattice.sets[d]).is_none()
}

/// δ-n-ideal with δ = δ₁.
pub fn is_quasi_n_ideal(i: &Ideal) -> Result<bool> {
    is_delta_n_ideal(i, &Expansion::delta1(i.ring()), DeltaNMethod::Definition)
}

/// All proper δ-n-ideals and the maximal ones among them.
pub fn delta_n_spectrum(ring: &Ring, delta: &Expansion) -> Result<Spectrum> {
    ring.check_same(delta.ring())?;
    let f = ring.require_finite("delta-n spectrum")?;
    let lat = &f.lattice;
    let members: Vec<usize> = lat
        .proper()
        .filter(|&i| decide(f, i, delta.at(i), DeltaNMethod::Definition))
        .collect();
    let maximal = members
        .iter()
        .copied()
        .filter(|&i| members.iter().all(|&j| j == i || !lat.le(i, j)))
        .collect::<Vec<_>>();
    let wrap = |v: &[usize]| v.iter().map(|&i| Ideal::from_lattice(ring, i)).collect();
    Ok(Spectrum {
        all: wrap(&members),
        maximal_members: wrap(&maximal),
    })
}

/// The elements of δ(0).
pub fn delta_nilpotents(ring: &Ring, delta: &Expansion) -> Result<ElementSet> {
    let z = delta.apply(&Ideal::zero(ring))?;
    Ok(match z.integer_generator() {
        Some(0) => ElementSet::Listed(vec![ring.zero()]),
        Some(d) => ElementSet::MultiplesOf(d),
        None => ElementSet::Listed(z.elements()?),
    })
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

    fn all_methods(i: &Ideal, d: &Expansion) -> bool {
        let v: Vec<bool> = DeltaNMethod::ALL
            .iter()
            .map(|&m| is_delta_n_ideal(i, d, m).unwrap())
            .collect();
        assert!(v.iter().all(|&x| x == v[0]), "methods disagree on {i:?} with {d}");
        v[0]
    }

    #[test]
    fn delta_primary_examples() {
        let r8 = z(8);
        assert!(is_delta_primary(&ideal(&r8, &[4]), &Expansion::delta1(&r8)).unwrap());
        let r12 = z(12);
        assert!(!is_delta_primary(&Ideal::zero(&r12), &Expansion::delta0(&r12)).unwrap());
        assert!(is_delta_primary(&ideal(&r12, &[6]), &Expansion::full(&r12)).unwrap());
    }

    #[test]
    fn n_ideal_examples() {
        assert!(is_n_ideal(&Ideal::zero(&z(8))).unwrap());
        let r6 = z(6);
        let (a, b) = n_ideal_witness(&Ideal::zero(&r6)).unwrap().unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("2".into(), "3".into()));
        assert!(is_n_ideal(&Ideal::integer(0)).unwrap());
    }

    #[test]
    fn improper_rejected() {
        let r = z(6);
        assert!(matches!(is_n_ideal(&Ideal::whole(&r)), Err(Error::ImproperIdeal(_))));
        let d = Expansion::delta0(&r);
        assert!(is_delta_primary(&Ideal::whole(&r), &d).is_err());
    }

    #[test]
    fn delta_n_examples() {
        let zz = Ring::integers();
        let five = Ideal::integer(5);
        assert!(is_delta_n_ideal(&five, &Expansion::delta_plus(&Ideal::integer(3)).unwrap(), DeltaNMethod::Definition).unwrap());
        assert!(!is_delta_n_ideal(&five, &Expansion::delta0(&zz), DeltaNMethod::ColonCriterion).unwrap());
        assert!(!is_delta_n_ideal(&five, &Expansion::delta1(&zz), DeltaNMethod::IdealPairs).unwrap());
        let r6 = z(6);
        assert!(all_methods(&Ideal::zero(&r6), &Expansion::full(&r6)));
        assert!(!all_methods(&Ideal::zero(&r6), &Expansion::delta1(&r6)));
        let r8 = z(8);
        assert!(all_methods(&ideal(&r8, &[4]), &Expansion::delta0(&r8)));
    }

    #[test]
    fn quasi_n_examples() {
        assert!(is_quasi_n_ideal(&Ideal::zero(&z(8))).unwrap());
        assert!(!is_quasi_n_ideal(&Ideal::zero(&z(12))).unwrap());
        let p = Ring::poly_quotient(4, &[0, 0, 0, 1]).unwrap();
        let x = Ideal::principal(&p.parse_element("x").unwrap()).unwrap();
        assert!(is_quasi_n_ideal(&x).unwrap());
    }

    #[test]
    fn spectra() {
        let r8 = z(8);
        let s = delta_n_spectrum(&r8, &Expansion::delta0(&r8)).unwrap();
        assert_eq!(s.all.len(), 3);
        assert_eq!(s.maximal_members, vec![ideal(&r8, &[2])]);
        let r12 = z(12);
        assert!(delta_n_spectrum(&r12, &Expansion::delta0(&r12)).unwrap().all.is_empty());
        assert_eq!(delta_n_spectrum(&r12, &Expansion::full(&r12)).unwrap().all.len(), 5);
    }

    #[test]
    fn nilpotent_sets() {
        let r12 = z(12);
        assert_eq!(
            delta_nilpotents(&r12, &Expansion::delta1(&r12)).unwrap(),
            ElementSet::Listed(vec![r12.int(0), r12.int(6)])
        );
        let r6 = z(6);
        let d = Expansion::delta_plus(&ideal(&r6, &[2])).unwrap();
        assert_eq!(
            delta_nilpotents(&r6, &d).unwrap(),
            ElementSet::Listed(vec![r6.int(0), r6.int(2), r6.int(4)])
        );
    }

    #[test]
    fn integer_delta_primary_matches_scan() {
        let zz = Ring::integers();
        for n in 2u64..=40 {
            for q in [1u64, 2, 3, 4, 6] {
                let d = Expansion::delta_plus(&Ideal::integer(q)).unwrap();
                let i = Ideal::integer(n);
                let dn = integers::gcd(n, q);
                // bounded scan of the definition over 1..=2n
                let scan = (1..=2 * n).all(|a| a % n == 0 || (1..=2 * n).all(|b| (a * b) % n != 0 || b % dn == 0));
                assert_eq!(is_delta_primary(&i, &d).unwrap(), scan, "n={n} q={q}");
                if let Some((a, b)) = delta_primary_witness(&i, &d).unwrap() {
                    let prod = zz.mul(&a, &b).unwrap();
                    assert!(i.contains(&prod).unwrap() && !i.contains(&a).unwrap());
                }
            }
        }
    }
}
