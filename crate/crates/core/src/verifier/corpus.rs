//! The instance corpus: rings, their expansion catalogs, and the derived
//! structures (quotients, localizations, homomorphisms) the claims range over.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::constructions::{
    localize, quotient_ring, Homomorphism, Idealization, Localization, MultiplicativeSet, ProductRing, QuotientRing,
};
use crate::dsl;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::expansion::{Expansion, ExpansionProfile, Recipe};
use crate::ideal::Ideal;
use crate::predicates::{decide, decide_primary, DeltaNMethod};
use crate::ring::{ElemExpr, FiniteRing, ModuleSpec, Ring, RingClass, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub ring: RingSpec,
    pub expansions: Vec<Recipe>,
}

/// An ordered list of rings with the expansions to check on each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

/// Every ring of the default corpus, in corpus order.
pub fn builtin_rings() -> Vec<RingSpec> {
    use RingSpec::*;
    let mut out: Vec<RingSpec> = (2..=16).chain([24, 27, 32, 36, 64]).map(Modular).collect();
    let poly = |base, modulus: &[u64]| PolyQuotient {
        base,
        modulus: modulus.to_vec(),
    };
    out.extend([
        poly(4, &[0, 0, 1]),
        poly(4, &[0, 0, 0, 1]),
        poly(2, &[0, 0, 1]),
        poly(2, &[0, 0, 0, 1]),
        poly(2, &[1, 1, 1]),
        poly(3, &[0, 0, 1]),
    ]);
    let prod = |a, b| Product(Box::new(Modular(a)), Box::new(Modular(b)));
    out.extend([prod(2, 2), prod(4, 9), prod(2, 4)]);
    let ideal = |n, module| Idealization {
        base: Box::new(Modular(n)),
        module,
    };
    out.extend([
        ideal(2, ModuleSpec::Regular),
        ideal(4, ModuleSpec::Regular),
        ideal(8, ModuleSpec::QuotientModule(vec![ElemExpr::int(4)])),
    ]);
    out
}

fn gens_of(i: &Ideal) -> Vec<ElemExpr> {
    i.generators().iter().map(|g| g.expr()).collect()
}

/// δ₀, δ₁, full, δ₊(J) for every proper J, δ⋆(P) for every nonzero P and
/// δ₁∘δ₊(√0).
pub fn catalog(ring: &Ring) -> Result<Vec<Recipe>> {
    let f = ring.require_finite("expansion catalog")?;
    let lat = &f.lattice;
    let ideal = |i| Ideal::from_lattice(ring, i);
    let mut out = vec![Recipe::Delta0, Recipe::Delta1, Recipe::Full];
    out.extend(lat.proper().map(|i| Recipe::DeltaPlus(gens_of(&ideal(i)))));
    out.extend((1..lat.len()).map(|i| Recipe::DeltaStar(gens_of(&ideal(i)))));
    out.push(Recipe::Compose(
        Box::new(Recipe::Delta1),
        Box::new(Recipe::DeltaPlus(gens_of(&ideal(f.nil_idx())))),
    ));
    Ok(out)
}

/// Expansions of ℤ used by the bounded ℤ claims.
pub fn integer_catalog() -> Vec<Recipe> {
    let g = |m: i64| vec![ElemExpr::int(m)];
    let mut out = vec![Recipe::Delta0, Recipe::Delta1, Recipe::Full];
    out.extend([0, 2, 3, 4, 6, 12].map(|m| Recipe::DeltaPlus(g(m))));
    out.extend([0, 2, 3, 4, 6, 12].map(|m| Recipe::DeltaStar(g(m))));
    out.push(Recipe::Compose(Box::new(Recipe::Delta1), Box::new(Recipe::DeltaPlus(g(6)))));
    out
}

/// The default corpus: every ring of [`builtin_rings`] with its full catalog.
pub fn builtin_corpus() -> Corpus {
    let entries = builtin_rings()
        .into_par_iter()
        .map(|spec| {
            let ring = Ring::new(&spec).expect("built-in ring");
            CorpusEntry {
                expansions: catalog(&ring).expect("finite"),
                ring: spec,
            }
        })
        .collect();
    Corpus { entries }
}

impl Corpus {
    /// One ring per line, `ring [; expansion]*`. A line without expansions
    /// gets the full catalog. `#` starts a comment.
    pub fn from_text(text: &str) -> Result<Corpus> {
        let mut entries = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let ast = dsl::parse_spec(line).map_err(|mut e| {
                e.line = k + 1;
                Error::Parse(e)
            })?;
            let expansions = if ast.expansions.is_empty() {
                catalog(&Ring::new(&ast.ring)?)?
            } else {
                ast.expansions
            };
            entries.push(CorpusEntry {
                ring: ast.ring,
                expansions,
            });
        }
        Ok(Corpus { entries })
    }

    /// Construct every ring and expansion; the first failure aborts.
    pub fn bind(&self) -> Result<Vec<Instance>> {
        self.entries.par_iter().map(Instance::bind).collect()
    }

    pub fn instance_count(&self) -> usize {
        self.entries.iter().map(|e| e.expansions.len()).sum()
    }
}

/// δ-n membership of every lattice index; the whole ring maps to false.
pub(crate) fn dn_table(f: &FiniteRing, e: &Expansion) -> Vec<bool> {
    let top = f.lattice.top();
    (0..f.lattice.len())
        .map(|i| i != top && decide(f, i, e.at(i), DeltaNMethod::Definition))
        .collect()
}

/// δ-n and δ-primary decisions for every pair I ⊆ T, where T plays δ(I).
pub(crate) struct PairTables {
    len: usize,
    dn: Vec<bool>,
    primary: Vec<bool>,
}

impl PairTables {
    fn new(f: &FiniteRing) -> PairTables {
        let lat = &f.lattice;
        let len = lat.len();
        let cells: Vec<(bool, bool)> = (0..len * len)
            .into_par_iter()
            .map(|k| {
                let (i, t) = (k / len, k % len);
                if i == lat.top() || !lat.le(i, t) {
                    return (false, false);
                }
                (decide(f, i, t, DeltaNMethod::Definition), decide_primary(f, i, t))
            })
            .collect();
        let (dn, primary) = cells.into_iter().unzip();
        PairTables { len, dn, primary }
    }

    /// I_i is a δ-n-ideal for any δ with δ(I_i) = I_t.
    pub fn dn(&self, i: usize, t: usize) -> bool {
        self.dn[i * self.len + t]
    }

    pub fn primary(&self, i: usize, t: usize) -> bool {
        self.primary[i * self.len + t]
    }
}

/// A bound corpus entry.
pub struct Instance {
    pub ring: Ring,
    pub expansions: Vec<Expansion>,
    pub(crate) dn: Vec<Vec<bool>>,
    pub(crate) profiles: Vec<ExpansionProfile>,
    pub(crate) pairs: PairTables,
    pub(crate) prime: Vec<bool>,
    pub(crate) class: RingClass,
    quotients: OnceLock<Vec<QuotientCase>>,
    localizations: OnceLock<Vec<LocalizationCase>>,
    homs: OnceLock<Vec<HomCase>>,
}

/// R/J with the derived δ_q of every instance expansion.
pub(crate) struct QuotientCase {
    pub j: usize,
    pub q: QuotientRing,
    /// Base index of I ⊇ J to the index of I/J.
    pub image: Vec<Option<usize>>,
    pub dq: Vec<Expansion>,
    pub dn: Vec<Vec<bool>>,
}

/// S⁻¹R with the derived δ_S of every instance expansion.
pub(crate) struct LocalizationCase {
    pub s: MultiplicativeSet,
    pub loc: Localization,
    pub extend: Vec<usize>,
    pub contract: Vec<usize>,
    pub ds: Vec<Expansion>,
    pub dn: Vec<Vec<bool>>,
}

/// A homomorphism with expansion catalogs on both sides.
pub(crate) struct HomCase {
    pub name: String,
    pub f: Homomorphism,
    pub injective: bool,
    pub surjective: bool,
    pub src_exps: Vec<Expansion>,
    pub src_dn: Vec<Vec<bool>>,
    pub tgt_exps: Vec<Expansion>,
    pub tgt_dn: Vec<Vec<bool>>,
    /// Target index to source index of the preimage.
    pub pre: Vec<usize>,
    /// Source index to target index of the image; surjective maps only.
    pub img: Vec<usize>,
    pub kernel: usize,
}

fn bind_catalog(ring: &Ring) -> Result<Vec<Expansion>> {
    catalog(ring)?.iter().map(|r| Expansion::new(ring, r)).collect()
}

fn dn_all(ring: &Ring, exps: &[Expansion]) -> Vec<Vec<bool>> {
    let f = ring.finite().unwrap();
    exps.iter().map(|e| dn_table(f, e)).collect()
}

fn set_index(ring: &Ring, set: &ElemSet) -> usize {
    ring.finite().unwrap().lattice.find(set).expect("ideal")
}

impl HomCase {
    fn new(name: String, f: Homomorphism, src_exps: Vec<Expansion>, tgt_exps: Vec<Expansion>) -> HomCase {
        let (src, tgt) = (f.source().clone(), f.target().clone());
        let (sf, tf) = (src.finite().unwrap(), tgt.finite().unwrap());
        let pre = (0..tf.lattice.len())
            .map(|j| {
                let set = ElemSet::from_indices(sf.size, sf.elements().filter(|&a| tf.lattice.sets[j].contains(f.at(a))));
                set_index(&src, &set)
            })
            .collect();
        let surjective = f.is_surjective();
        let img = if surjective {
            (0..sf.lattice.len())
                .map(|i| {
                    let set = ElemSet::from_indices(tf.size, sf.lattice.sets[i].iter().map(|a| f.at(a)));
                    set_index(&tgt, &set)
                })
                .collect()
        } else {
            Vec::new()
        };
        HomCase {
            name,
            injective: f.is_injective(),
            surjective,
            src_dn: dn_all(&src, &src_exps),
            tgt_dn: dn_all(&tgt, &tgt_exps),
            kernel: f.kernel().idx(),
            f,
            src_exps,
            tgt_exps,
            pre,
            img,
        }
    }

    /// δ(f⁻¹(J)) = f⁻¹(γ(J)) for every target ideal J.
    pub fn is_delta_gamma(&self, d: usize, g: usize) -> bool {
        let (de, ge) = (&self.src_exps[d], &self.tgt_exps[g]);
        (0..self.pre.len()).all(|j| de.at(self.pre[j]) == self.pre[ge.at(j)])
    }
}

impl Instance {
    pub fn bind(entry: &CorpusEntry) -> Result<Instance> {
        let ring = Ring::new(&entry.ring)?;
        let expansions = entry
            .expansions
            .iter()
            .map(|r| Expansion::new(&ring, r))
            .collect::<Result<Vec<_>>>()?;
        Instance::from_parts(ring, expansions)
    }

    /// Finite rings only; ℤ is covered by the bounded integer claims.
    pub fn from_parts(ring: Ring, expansions: Vec<Expansion>) -> Result<Instance> {
        let f = ring.require_finite("corpus instance")?;
        let pairs = PairTables::new(f);
        let top = f.lattice.top();
        let dn = expansions
            .iter()
            .map(|e| (0..f.lattice.len()).map(|i| i != top && pairs.dn(i, e.at(i))).collect())
            .collect();
        let profiles = expansions.par_iter().map(|e| e.profile()).collect::<Result<Vec<_>>>()?;
        let prime = (0..f.lattice.len()).map(|i| f.is_prime_idx(i)).collect();
        Ok(Instance {
            class: ring.classify(),
            ring,
            expansions,
            dn,
            profiles,
            pairs,
            prime,
            quotients: OnceLock::new(),
            localizations: OnceLock::new(),
            homs: OnceLock::new(),
        })
    }

    pub(crate) fn f(&self) -> &FiniteRing {
        self.ring.finite().expect("finite instance")
    }

    pub(crate) fn len(&self) -> usize {
        self.f().lattice.len()
    }

    pub(crate) fn top(&self) -> usize {
        self.f().lattice.top()
    }

    pub(crate) fn nil(&self) -> usize {
        self.f().nil_idx()
    }

    pub(crate) fn le(&self, i: usize, j: usize) -> bool {
        self.f().lattice.le(i, j)
    }

    /// δ_e(I_i).
    pub(crate) fn at(&self, e: usize, i: usize) -> usize {
        self.expansions[e].at(i)
    }

    pub(crate) fn nid(&self, i: usize) -> bool {
        i != self.top() && self.pairs.dn(i, i)
    }

    pub(crate) fn primary(&self, e: usize, i: usize) -> bool {
        i != self.top() && self.pairs.primary(i, self.at(e, i))
    }

    pub(crate) fn label(&self, a: u32) -> &str {
        &self.f().labels[a as usize]
    }

    pub(crate) fn show(&self, i: usize) -> String {
        Ideal::from_lattice(&self.ring, i).to_string()
    }

    pub(crate) fn quotients(&self) -> &[QuotientCase] {
        self.quotients.get_or_init(|| {
            let f = self.f();
            f.lattice
                .proper()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|j| {
                    let q = quotient_ring(&self.ring, &Ideal::from_lattice(&self.ring, j)).expect("quotient");
                    let image = (0..f.lattice.len())
                        .map(|i| {
                            f.lattice
                                .le(j, i)
                                .then(|| q.image(&Ideal::from_lattice(&self.ring, i)).expect("image").idx())
                        })
                        .collect();
                    let dq: Vec<Expansion> =
                        self.expansions.iter().map(|e| e.quotient_on(&q).expect("delta_q")).collect();
                    let dn = dn_all(&q.ring, &dq);
                    QuotientCase { j, q, image, dq, dn }
                })
                .collect()
        })
    }

    pub(crate) fn quotient(&self, j: usize) -> &QuotientCase {
        self.quotients().iter().find(|c| c.j == j).expect("proper ideal")
    }

    /// Localizations at the distinct sets {a^k} for non-nilpotent a, and at
    /// the units.
    pub(crate) fn localizations(&self) -> &[LocalizationCase] {
        self.localizations.get_or_init(|| {
            let f = self.f();
            let mut sets: Vec<MultiplicativeSet> = Vec::new();
            let mut cands = vec![MultiplicativeSet::units(&self.ring).expect("units")];
            for a in f.elements().filter(|&a| !f.nilradical.contains(a)) {
                cands.push(MultiplicativeSet::generated_by(&self.ring, &[self.ring.elem(a)]).expect("powers"));
            }
            for s in cands {
                if !sets.iter().any(|t| t.set == s.set) {
                    sets.push(s);
                }
            }
            sets.into_par_iter()
                .map(|s| {
                    let loc = localize(&self.ring, &s).expect("localization");
                    let lf = loc.ring().finite().unwrap();
                    let extend = (0..f.lattice.len())
                        .map(|i| loc.extend(&Ideal::from_lattice(&self.ring, i)).expect("extend").idx())
                        .collect();
                    let contract = (0..lf.lattice.len())
                        .map(|k| loc.contract(&Ideal::from_lattice(loc.ring(), k)).expect("contract").idx())
                        .collect();
                    let ds: Vec<Expansion> =
                        self.expansions.iter().map(|e| e.localized_on(&loc).expect("delta_S")).collect();
                    let dn = dn_all(loc.ring(), &ds);
                    LocalizationCase {
                        s,
                        loc,
                        extend,
                        contract,
                        ds,
                        dn,
                    }
                })
                .collect()
        })
    }

    /// Identity, projections onto quotients, factors and idealization
    /// bases, the embeddings R → R(+)M and ℤn → ℤn[x]/(f), and the
    /// canonical maps to localizations.
    pub(crate) fn homs(&self) -> &[HomCase] {
        self.homs.get_or_init(|| self.build_homs().expect("homomorphisms"))
    }

    fn build_homs(&self) -> Result<Vec<HomCase>> {
        let r = &self.ring;
        let own = || self.expansions.clone();
        let mut out = vec![HomCase::new(format!("id on {r}"), Homomorphism::identity(r)?, own(), own())];
        for c in self.quotients().iter().filter(|c| c.j != 0) {
            let mut tgt = bind_catalog(&c.q.ring)?;
            tgt.extend(c.dq.iter().cloned());
            out.push(HomCase::new(
                format!("{r} -> {}", c.q.ring),
                c.q.projection.clone(),
                own(),
                tgt,
            ));
        }
        if let Some(p) = ProductRing::of(r) {
            let (p1, p2) = p.projections()?;
            for (h, side) in [(p1, &p.left), (p2, &p.right)] {
                out.push(HomCase::new(format!("{r} -> {side}"), h, own(), bind_catalog(side)?));
            }
        }
        if let Some(id) = Idealization::of(r) {
            let base = id.base();
            out.push(HomCase::new(format!("{r} -> {base}"), id.projection()?, own(), bind_catalog(base)?));
            out.push(HomCase::new(format!("{base} -> {r}"), id.inclusion()?, bind_catalog(base)?, own()));
        }
        if let RingSpec::PolyQuotient { base, .. } = r.spec() {
            let zn = Ring::modular(*base)?;
            let h = Homomorphism::new(&zn, r, |a| r.element(&a.expr()))?;
            out.push(HomCase::new(format!("{zn} -> {r}"), h, bind_catalog(&zn)?, own()));
        }
        for c in self.localizations() {
            let mut tgt = bind_catalog(c.loc.ring())?;
            tgt.extend(c.ds.iter().cloned());
            out.push(HomCase::new(
                format!("{r} -> {}", c.loc.ring()),
                c.loc.canonical().clone(),
                own(),
                tgt,
            ));
        }
        Ok(out)
    }
}
