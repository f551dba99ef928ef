//! Finite unitary modules over finite rings, and their submodules.

use std::fmt;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::lattice::close_under_sums;
use crate::ideal::Ideal;
use crate::ring::{ElemExpr, Element, ModuleSpec, Ring};

/// An R-module with a finite additive group and a tabulated scalar action.
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

struct ModuleData {
    base: Ring,
    spec: ModuleSpec,
    text: String,
    size: usize,
    zero: u32,
    add: Vec<u32>,
    /// r * size + m
    act: Vec<u32>,
    exprs: Vec<ElemExpr>,
    labels: Vec<String>,
    kind: ModuleKind,
}

enum ModuleKind {
    /// R/I with classes in order of their least representative.
    Quotient { class_of: Vec<u32> },
    /// Index = left * |right| + right.
    Product { left: Module, right: Module },
}

/// A submodule, stored as a canonical element set.
#[derive(Clone)]
pub struct Submodule {
    pub(crate) module: Module,
    pub(crate) set: ElemSet,
}

impl Module {
    pub fn new(base: &Ring, spec: &ModuleSpec) -> Result<Module> {
        let f = base.require_finite("module construction")?;
        let m = match spec {
            ModuleSpec::Regular => Module::quotient(base, &Ideal::zero(base), ModuleSpec::Regular)?,
            ModuleSpec::QuotientModule(gens) => {
                let g = gens
                    .iter()
                    .map(|e| base.element(e))
                    .collect::<Result<Vec<_>>>()?;
                let i = Ideal::from_generators(base, &g)?;
                if !i.is_proper() {
                    return Err(Error::InvalidModule(format!(
                        "R/I with I = R is the zero module; use a proper ideal of {base}"
                    )));
                }
                let canon = ModuleSpec::QuotientModule(i.generators().iter().map(|e| e.expr()).collect());
                Module::quotient(base, &i, canon)?
            }
            ModuleSpec::Product(a, b) => {
                let (l, r) = (Module::new(base, a)?, Module::new(base, b)?);
                Module::product(&l, &r)?
            }
        };
        m.check_action(f.size)?;
        Ok(m)
    }

    fn quotient(base: &Ring, i: &Ideal, spec: ModuleSpec) -> Result<Module> {
        let f = base.require_finite("module construction")?;
        let set = i.set();
        let mut class_of = vec![u32::MAX; f.size];
        let mut reps = Vec::new();
        for a in f.elements() {
            if class_of[a as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(a);
            for x in set.iter() {
                class_of[f.add(a, x) as usize] = c;
            }
        }
        let size = reps.len();
        let add = (0..size * size)
            .map(|k| class_of[f.add(reps[k / size], reps[k % size]) as usize])
            .collect();
        let act = (0..f.size * size)
            .map(|k| class_of[f.mul(k as u32 / size as u32, reps[k % size]) as usize])
            .collect();
        let exprs: Vec<ElemExpr> = reps.iter().map(|&r| f.exprs[r as usize].clone()).collect();
        Ok(Module::assemble(
            base,
            spec,
            size,
            class_of[f.zero as usize],
            add,
            act,
            exprs,
            ModuleKind::Quotient { class_of },
        ))
    }

    fn product(l: &Module, r: &Module) -> Result<Module> {
        let base = l.base().clone();
        let rs = r.size();
        let size = l.size() * rs;
        let split = |i: usize| (i as u32 / rs as u32, i as u32 % rs as u32);
        let add = (0..size * size)
            .map(|k| {
                let ((a, b), (c, d)) = (split(k / size), split(k % size));
                l.add(a, c) * rs as u32 + r.add(b, d)
            })
            .collect();
        let bs = base.size().unwrap();
        let act = (0..bs * size)
            .map(|k| {
                let (s, (a, b)) = (k / size, split(k % size));
                l.act(s as u32, a) * rs as u32 + r.act(s as u32, b)
            })
            .collect();
        let exprs = (0..size)
            .map(|i| {
                let (a, b) = split(i);
                ElemExpr::pair(l.0.exprs[a as usize].clone(), r.0.exprs[b as usize].clone())
            })
            .collect();
        let spec = ModuleSpec::Product(Box::new(l.spec().clone()), Box::new(r.spec().clone()));
        Ok(Module::assemble(
            &base,
            spec,
            size,
            l.0.zero * rs as u32 + r.0.zero,
            add,
            act,
            exprs,
            ModuleKind::Product {
                left: l.clone(),
                right: r.clone(),
            },
        ))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        base: &Ring,
        spec: ModuleSpec,
        size: usize,
        zero: u32,
        add: Vec<u32>,
        act: Vec<u32>,
        exprs: Vec<ElemExpr>,
        kind: ModuleKind,
    ) -> Module {
        let labels = exprs.iter().map(|e| e.to_string()).collect();
        Module(Arc::new(ModuleData {
            text: spec.display_over(base.spec()),
            base: base.clone(),
            spec,
            size,
            zero,
            add,
            act,
            exprs,
            labels,
            kind,
        }))
    }

    /// Unital, bilinear and associative action, checked on every triple.
    fn check_action(&self, ring_size: usize) -> Result<()> {
        let f = self.0.base.finite().unwrap();
        let n = self.size() as u32;
        let fail = |what: &str| Err(Error::InvalidModule(format!("{what} fails for {}", self.0.text)));
        for m in 0..n {
            if self.act(f.one, m) != m {
                return fail("1·m = m");
            }
            for r in 0..ring_size as u32 {
                for s in 0..ring_size as u32 {
                    if self.act(f.add(r, s), m) != self.add(self.act(r, m), self.act(s, m)) {
                        return fail("(r+s)m = rm+sm");
                    }
                    if self.act(f.mul(r, s), m) != self.act(r, self.act(s, m)) {
                        return fail("(rs)m = r(sm)");
                    }
                }
                for k in 0..n {
                    if self.act(r, self.add(m, k)) != self.add(self.act(r, m), self.act(r, k)) {
                        return fail("r(m+n) = rm+rn");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &Ring {
        &self.0.base
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.0.spec
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub(crate) fn zero(&self) -> u32 {
        self.0.zero
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        self.0.add[a as usize * self.0.size + b as usize]
    }

    /// Scalar action r·m on indices.
    pub(crate) fn act(&self, r: u32, m: u32) -> u32 {
        self.0.act[r as usize * self.0.size + m as usize]
    }

    pub(crate) fn expr(&self, m: u32) -> &ElemExpr {
        &self.0.exprs[m as usize]
    }

    pub fn label(&self, m: u32) -> &str {
        &self.0.labels[m as usize]
    }

    pub(crate) fn bind(&self, e: &ElemExpr) -> Result<u32> {
        match &self.0.kind {
            ModuleKind::Quotient { class_of } => {
                Ok(class_of[self.0.base.finite().unwrap().bind(e)? as usize])
            }
            ModuleKind::Product { left, right } => match e {
                ElemExpr::Pair(a, b) => Ok(left.bind(a)? * right.size() as u32 + right.bind(b)?),
                _ => Err(Error::Element(format!("`{e}` is not a pair in {}", self.0.text))),
            },
        }
    }

    /// The submodule {r·m : r ∈ R}.
    fn cyclic(&self, m: u32) -> ElemSet {
        let bs = self.0.base.size().unwrap() as u32;
        ElemSet::from_indices(self.size(), (0..bs).map(|r| self.act(r, m)))
    }

    fn sum_set(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.size());
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// Every submodule, smallest first: cyclic submodules closed under sums.
    pub fn submodules(&self) -> Vec<Submodule> {
        let cyclic = (0..self.size() as u32).map(|m| (self.cyclic(m), m));
        let (sets, _) = close_under_sums(cyclic, |a, b| self.sum_set(a, b));
        sets.into_iter()
            .map(|set| Submodule {
                module: self.clone(),
                set,
            })
            .collect()
    }

    pub fn full(&self) -> Submodule {
        Submodule {
            module: self.clone(),
            set: ElemSet::full(self.size()),
        }
    }

    /// I·M, the submodule generated by all a·m with a ∈ I.
    pub fn ideal_times(&self, i: &Ideal) -> Result<Submodule> {
        self.0.base.check_same(i.ring())?;
        let mut set = ElemSet::empty(self.size());
        set.insert(self.zero());
        let products: Vec<u32> = i
            .set()
            .iter()
            .flat_map(|a| (0..self.size() as u32).map(move |m| (a, m)))
            .map(|(a, m)| self.act(a, m))
            .collect();
        for p in products {
            let cur: Vec<u32> = set.iter().collect();
            for c in cur {
                set.insert(self.add(c, p));
            }
        }
        Ok(Submodule {
            module: self.clone(),
            set,
        })
    }

    pub(crate) fn same(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.base == other.0.base && self.0.text == other.0.text)
    }
}

impl Submodule {
    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_full(&self) -> bool {
        self.set.is_full()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn labels(&self) -> Vec<String> {
        self.set.iter().map(|m| self.module.label(m).to_string()).collect()
    }

    pub fn contains(&self, e: &ElemExpr) -> Result<bool> {
        Ok(self.set.contains(self.module.bind(e)?))
    }
}

/// Scalar action on typed values, for callers outside the crate.
pub fn act(module: &Module, r: &Element, m: &ElemExpr) -> Result<ElemExpr> {
    let ri = module.base().index_of(r)?;
    let mi = module.bind(m)?;
    Ok(module.expr(module.act(ri, mi)).clone())
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.module.same(&other.module) && self.set == other.set
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.text)
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({} over {})", self.0.text, self.0.base)
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.module)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_submodules_are_ideals() {
        let z8 = Ring::modular(8).unwrap();
        let m = Module::new(&z8, &ModuleSpec::Regular).unwrap();
        assert_eq!(m.size(), 8);
        assert_eq!(m.submodules().len(), 4);
    }

    #[test]
    fn quotient_module() {
        let z8 = Ring::modular(8).unwrap();
        let m = Module::new(&z8, &ModuleSpec::QuotientModule(vec![ElemExpr::int(4)])).unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.submodules().len(), 3);
        assert_eq!(act(&m, &z8.int(3), &ElemExpr::int(3)).unwrap(), ElemExpr::int(1));
        let bad = Module::new(&z8, &ModuleSpec::QuotientModule(vec![ElemExpr::int(1)]));
        assert!(matches!(bad, Err(Error::InvalidModule(_))));
    }

    #[test]
    fn product_module() {
        let z2 = Ring::modular(2).unwrap();
        let spec = ModuleSpec::Product(Box::new(ModuleSpec::Regular), Box::new(ModuleSpec::Regular));
        let m = Module::new(&z2, &spec).unwrap();
        assert_eq!(m.size(), 4);
        // {0}, three lines, everything
        assert_eq!(m.submodules().len(), 5);
        assert_eq!(m.to_string(), "(Z2 x Z2)");
    }

    #[test]
    fn ideal_times_module() {
        let z4 = Ring::modular(4).unwrap();
        let m = Module::new(&z4, &ModuleSpec::Regular).unwrap();
        let two = Ideal::from_generators(&z4, &[z4.int(2)]).unwrap();
        assert_eq!(m.ideal_times(&two).unwrap().labels(), ["0", "2"]);
    }
}
