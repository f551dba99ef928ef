use std::collections::HashMap;

use crate::elemset::ElemSet;
use crate::ring::tables::Tables;

/// Every ideal of a finite ring, ordered by size then by membership.
#[derive(Clone, Debug)]
pub(crate) struct Lattice {
    pub sets: Vec<ElemSet>,
    /// A short generator list for each ideal, as element indices.
    pub gens: Vec<Vec<u32>>,
    index: HashMap<ElemSet, usize>,
    /// subset[i][j] == (ideal i ⊆ ideal j)
    subset: Vec<Vec<bool>>,
}

/// Deduplicate the cyclic pieces, close them under `sum`, and sort by
/// (size, set). Shared by ideal and submodule enumeration.
pub(crate) fn close_under_sums(
    cyclic: impl IntoIterator<Item = (ElemSet, u32)>,
    sum: impl Fn(&ElemSet, &ElemSet) -> ElemSet,
) -> (Vec<ElemSet>, Vec<Vec<u32>>) {
    let mut found: Vec<(ElemSet, Vec<u32>)> = Vec::new();
    let mut seen: HashMap<ElemSet, usize> = HashMap::new();
    for (p, a) in cyclic {
        if !seen.contains_key(&p) {
            seen.insert(p.clone(), found.len());
            found.push((p, vec![a]));
        }
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let s = sum(&found[i].0, &found[j].0);
            if !seen.contains_key(&s) {
                let mut g = found[j].1.clone();
                g.extend(found[i].1.iter().copied());
                seen.insert(s.clone(), found.len());
                found.push((s, g));
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    found.into_iter().unzip()
}

impl Lattice {
    /// Principal ideals first, then close under pairwise sums until no new
    /// ideal appears. Every ideal of a finite ring is a finite sum of
    /// principal ideals, so the result is complete.
    pub fn enumerate(t: &Tables) -> Lattice {
        let (sets, gens) = close_under_sums(t.elements().map(|a| (t.principal(a), a)), |a, b| {
            t.sum_set(a, b)
        });
        Lattice::from_parts(sets, gens)
    }

    pub fn from_parts(sets: Vec<ElemSet>, gens: Vec<Vec<u32>>) -> Lattice {
        let index = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let subset = sets
            .iter()
            .map(|a| sets.iter().map(|b| a.is_subset(b)).collect())
            .collect();
        Lattice {
            sets,
            gens,
            index,
            subset,
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn find(&self, s: &ElemSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.subset[i][j]
    }

    /// Index of the whole ring.
    pub fn top(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.top()
    }

    /// Proper ideals not strictly contained in another proper ideal.
    pub fn maximal(&self) -> Vec<usize> {
        let top = self.top();
        (0..top)
            .filter(|&i| (0..top).all(|j| j == i || !self.le(i, j)))
            .collect()
    }
}
