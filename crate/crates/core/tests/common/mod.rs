//! Brute-force oracles built only from the public element arithmetic.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use deltan::verifier::builtin_rings;
use deltan::{enumerate_ideals, Element, Ideal, Ring};

/// Index-level add and mul tables of a small ring.
pub struct Tables {
    pub elems: Vec<Element>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl Tables {
    pub fn new(r: &Ring) -> Tables {
        let elems = r.elements().unwrap();
        let pos: HashMap<Element, usize> = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let table = |op: &dyn Fn(&Element, &Element) -> Element| -> Vec<Vec<usize>> {
            elems.iter().map(|a| elems.iter().map(|b| pos[&op(a, b)]).collect()).collect()
        };
        let add = table(&|a, b| r.add(a, b).unwrap());
        let mul = table(&|a, b| r.mul(a, b).unwrap());
        Tables { elems, add, mul }
    }

    pub fn n(&self) -> usize {
        self.elems.len()
    }

    pub fn zero(&self) -> usize {
        let z = self.elems[0].ring().zero();
        self.elems.iter().position(|e| *e == z).unwrap()
    }

    pub fn mask(&self, i: &Ideal) -> u32 {
        let members: HashSet<Element> = i.elements().unwrap().into_iter().collect();
        (0..self.n()).filter(|&k| members.contains(&self.elems[k])).map(|k| 1 << k).sum()
    }

    fn has(s: u32, k: usize) -> bool {
        s >> k & 1 == 1
    }

    pub fn is_ideal(&self, s: u32) -> bool {
        let n = self.n();
        let members: Vec<usize> = (0..n).filter(|&k| Self::has(s, k)).collect();
        Self::has(s, self.zero())
            && members.iter().all(|&a| {
                members.iter().all(|&b| Self::has(s, self.add[a][b])) && (0..n).all(|r| Self::has(s, self.mul[r][a]))
            })
    }

    pub fn radical(&self, s: u32) -> u32 {
        (0..self.n())
            .filter(|&a| {
                let mut p = a;
                (0..=self.n()).any(|_| {
                    let hit = Self::has(s, p);
                    p = self.mul[p][a];
                    hit
                })
            })
            .map(|k| 1 << k)
            .sum()
    }

    pub fn colon(&self, s: u32, x: usize) -> u32 {
        (0..self.n()).filter(|&a| Self::has(s, self.mul[a][x])).map(|k| 1 << k).sum()
    }
}

pub fn small_rings() -> Vec<Ring> {
    builtin_rings()
        .iter()
        .map(|s| Ring::new(s).unwrap())
        .filter(|r| r.size().unwrap_or(usize::MAX) <= 16)
        .collect()
}

/// The oracle's ideal count for `r` must match `enumerate_ideals` exactly.
pub fn enumeration_matches(r: &Ring) -> bool {
    let t = Tables::new(r);
    let oracle: BTreeSet<u32> = (0..1u32 << t.n()).filter(|&s| t.is_ideal(s)).collect();
    let found: Vec<u32> = enumerate_ideals(r).unwrap().iter().map(|i| t.mask(i)).collect();
    let found_set: BTreeSet<u32> = found.iter().copied().collect();
    found.len() == found_set.len() && found_set == oracle
}

/// Radical, element colon and ideal colon against their definitions.
pub fn operators_match(r: &Ring) -> bool {
    let t = Tables::new(r);
    let ideals = enumerate_ideals(r).unwrap();
    ideals.iter().all(|i| {
        let s = t.mask(i);
        t.mask(&i.radical()) == t.radical(s)
            && t.elems.iter().enumerate().all(|(x, e)| t.mask(&i.colon_element(e).unwrap()) == t.colon(s, x))
            && ideals.iter().all(|j| {
                let want = t.elems.iter().enumerate().fold(u32::MAX, |acc, (x, e)| {
                    if j.contains(e).unwrap() {
                        acc & t.colon(s, x)
                    } else {
                        acc
                    }
                });
                t.mask(&i.colon_ideal(j).unwrap()) == want
            })
    })
}
