//! Operation tables shared by every finite backend.

use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// Rings up to this size are axiom-checked on every triple.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 256;
/// Number of random triples checked for larger rings.
pub const SAMPLED_AXIOM_TRIPLES: usize = 10_000;
/// Largest finite ring the table backends will build.
pub const MAX_FINITE_SIZE: usize = 4096;

#[derive(Clone, Debug)]
pub(crate) struct Tables {
    pub size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    pub zero: u32,
    pub one: u32,
}

impl Tables {
    pub fn build(
        size: usize,
        zero: u32,
        one: u32,
        add: impl Fn(u32, u32) -> u32,
        mul: impl Fn(u32, u32) -> u32,
    ) -> Result<Tables> {
        if size > MAX_FINITE_SIZE {
            return Err(Error::TooLarge(size, MAX_FINITE_SIZE));
        }
        let mut add_t = vec![0u32; size * size];
        let mut mul_t = vec![0u32; size * size];
        for a in 0..size as u32 {
            for b in 0..size as u32 {
                let s = add(a, b);
                let p = mul(a, b);
                if s as usize >= size || p as usize >= size {
                    return Err(Error::RingAxiom(format!("operation on ({a},{b}) left the ring")));
                }
                add_t[a as usize * size + b as usize] = s;
                mul_t[a as usize * size + b as usize] = p;
            }
        }
        let mut neg = vec![u32::MAX; size];
        for a in 0..size {
            for b in 0..size {
                if add_t[a * size + b] == zero {
                    neg[a] = b as u32;
                    break;
                }
            }
            if neg[a] == u32::MAX {
                return Err(Error::RingAxiom(format!("element {a} has no additive inverse")));
            }
        }
        let t = Tables {
            size,
            add: add_t,
            mul: mul_t,
            neg,
            zero,
            one,
        };
        t.check_axioms()?;
        Ok(t)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: u32, k: usize) -> u32 {
        let mut acc = self.one;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.size as u32
    }

    fn check_triple(&self, a: u32, b: u32, c: u32) -> Result<()> {
        let fail = |what: &str| Err(Error::RingAxiom(format!("{what} fails at ({a},{b},{c})")));
        if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
            return fail("additive associativity");
        }
        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
            return fail("multiplicative associativity");
        }
        if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
            return fail("distributivity");
        }
        Ok(())
    }

    fn check_axioms(&self) -> Result<()> {
        if self.zero == self.one {
            return Err(Error::RingAxiom("0 = 1".into()));
        }
        for a in self.elements() {
            if self.add(a, self.zero) != a || self.mul(a, self.one) != a {
                return Err(Error::RingAxiom(format!("identity fails at {a}")));
            }
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::RingAxiom(format!("commutativity fails at ({a},{b})")));
                }
            }
        }
        if self.size <= EXHAUSTIVE_AXIOM_LIMIT {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        self.check_triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_0001);
            let n = self.size as u32;
            for _ in 0..SAMPLED_AXIOM_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                self.check_triple(a, b, c)?;
            }
        }
        Ok(())
    }

    /// The principal ideal R·a.
    pub fn principal(&self, a: u32) -> ElemSet {
        ElemSet::from_indices(self.size, self.elements().map(|r| self.mul(r, a)))
    }

    /// {i + j : i ∈ I, j ∈ J}, which is already an ideal when I and J are.
    pub fn sum_set(&self, i: &ElemSet, j: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.size);
        for x in i.iter() {
            for y in j.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// Smallest ideal containing `gens`, by work-list saturation.
    pub fn closure(&self, gens: impl IntoIterator<Item = u32>) -> ElemSet {
        let mut set = ElemSet::empty(self.size);
        let mut members = vec![self.zero];
        set.insert(self.zero);
        let mut work: Vec<u32> = gens.into_iter().collect();
        while let Some(x) = work.pop() {
            if !set.insert(x) {
                continue;
            }
            members.push(x);
            for r in self.elements() {
                let y = self.mul(r, x);
                if !set.contains(y) {
                    work.push(y);
                }
            }
            for k in 0..members.len() {
                let y = self.add(members[k], x);
                if !set.contains(y) {
                    work.push(y);
                }
            }
        }
        set
    }

    /// True when `s` contains 0 and is closed under addition, negation and
    /// multiplication by ring elements.
    pub fn is_ideal(&self, s: &ElemSet) -> bool {
        if !s.contains(self.zero) {
            return false;
        }
        let members: Vec<u32> = s.iter().collect();
        for &x in &members {
            if !s.contains(self.neg(x)) {
                return false;
            }
            for &y in &members {
                if !s.contains(self.add(x, y)) {
                    return false;
                }
            }
            for r in self.elements() {
                if !s.contains(self.mul(r, x)) {
                    return false;
                }
            }
        }
        true
    }
}
