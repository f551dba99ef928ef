//! The claim registry. Each claim quantifies over corpus instances, over
//! fixed rings (ℤ, ℤ₆, ℤ₄[x]/(x³)), or both.

use serde::Serialize;

use super::corpus::{catalog, dn_table, integer_catalog, Instance};
use super::report::{Tally, Witness};
use crate::constructions::{Idealization, ProductRing};
use crate::elemset::ElemSet;
use crate::expansion::{Expansion, Recipe};
use crate::ideal::Ideal;
use crate::predicates::{
    decide, delta_n_spectrum, is_delta_n_ideal, is_delta_primary, is_n_ideal, n_ideal_witness, DeltaNMethod,
};
use crate::ring::{integers, ElemExpr, Ring, RingSpec};

/// Upper bound on n for the ℤ claims.
pub const INTEGER_BOUND: u64 = 1000;
/// Upper bound on the primes p, q of the ℤ example.
pub const PRIME_BOUND: u64 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// A result of the theory; the default suite expects zero failures.
    Theorem,
    /// A computed fact about a statement whose literal reading fails.
    Audit,
    /// A deliberately false statement that must produce a witness.
    SelfTest,
}

/// The objects a claim quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Slot {
    Ring,
    Expansion,
    Ideal,
    Element,
    Submodule,
    Homomorphism,
    MultiplicativeSet,
}

pub struct Claim {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub description: &'static str,
    /// A verbatim fragment of the statement in the source text.
    pub anchor: &'static str,
    pub slots: &'static [Slot],
    pub(crate) per_instance: Option<fn(&Instance, &mut Tally)>,
    pub(crate) global: Option<fn(&mut Tally)>,
}

impl Claim {
    /// Whether the claim is checked on every corpus instance.
    pub fn per_instance(&self) -> bool {
        self.per_instance.is_some()
    }

    /// Whether the claim is checked on its own fixed rings.
    pub fn global(&self) -> bool {
        self.global.is_some()
    }
}

use ClaimKind::*;
use Slot as S;

const fn claim(
    id: &'static str,
    kind: ClaimKind,
    description: &'static str,
    anchor: &'static str,
    slots: &'static [Slot],
    per_instance: Option<fn(&Instance, &mut Tally)>,
    global: Option<fn(&mut Tally)>,
) -> Claim {
    Claim {
        id,
        kind,
        description,
        anchor,
        slots,
        per_instance,
        global,
    }
}

pub(crate) static CLAIMS: &[Claim] = &[
    claim(
        "def-expansion-axioms",
        Theorem,
        "Every corpus expansion satisfies I ⊆ δ(I) and is monotone.",
        "if it assigns to each ideal",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(expansion_axioms),
        None,
    ),
    claim(
        "def-delta0-is-n-ideal",
        Theorem,
        "I is a δ₀-n-ideal iff I is an n-ideal, the latter tested elementwise.",
        "is a $\\delta_{0}$-$n$-ideal if and\nonly if $I$ is an $n$-ideal",
        &[S::Ring, S::Ideal],
        Some(delta0_is_n_ideal),
        None,
    ),
    claim(
        "rem-n-ideal-is-delta-n",
        Theorem,
        "Every n-ideal is a δ-n-ideal for every expansion δ.",
        "an $n$-ideal is a $\\delta$-$n$-ideal",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(n_ideal_is_delta_n),
        None,
    ),
    claim(
        "example-e3-audit",
        Audit,
        "In ℤ₄[x]/(x³) the element x+1 is a unit, so (x+1) is the whole ring and the example's ideal J is not proper.",
        "let $J=(x+1)R_{1}/I$",
        &[S::Ring, S::Ideal, S::Element],
        None,
        Some(example_e3_audit),
    ),
    claim(
        "prop-subset-nilradical",
        Theorem,
        "A δ-n-ideal I with δ(I) ≠ R lies in the nilradical.",
        "then $I\\subseteq\\sqrt{0}.$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(subset_nilradical),
        None,
    ),
    claim(
        "example-z6-zero",
        Theorem,
        "In ℤ₆ the zero ideal is neither a δ₀- nor a δ₁-n-ideal, with witness a=2, b=3.",
        "Since $2\\cdot3\\in I$ but neither",
        &[S::Ring, S::Expansion, S::Ideal, S::Element],
        None,
        Some(example_z6_zero),
    ),
    claim(
        "prop-primary-to-n",
        Theorem,
        "A δ-primary ideal inside the nilradical is a δ-n-ideal.",
        "If $I$ is a $\\delta$-primary ideal\nof $R$, then $I$ is a $\\delta$-$n$-ideal of $R$.",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(primary_to_n),
        None,
    ),
    claim(
        "prop-nilradical-primary-iff-n",
        Theorem,
        "The nilradical is δ-primary iff it is a δ-n-ideal.",
        "The converse is also true if\n$I=\\sqrt{0}$.",
        &[S::Ring, S::Expansion],
        Some(nilradical_primary_iff_n),
        None,
    ),
    claim(
        "example-zz-delta-plus",
        Theorem,
        "For primes p ≠ q ≤ 100, pℤ is a δ₊(qℤ)-n-ideal of ℤ but not an n-, δ₀- or δ₁-n-ideal.",
        "is a\n$\\delta_{+}$-$n$-ideal of $R$",
        &[S::Ring, S::Expansion, S::Ideal],
        None,
        Some(example_zz_delta_plus),
    ),
    claim(
        "prop-primary-iff-nil",
        Theorem,
        "A δ-primary I with δ(I) ≠ R is a δ-n-ideal iff I ⊆ √0.",
        "$I$ is a $\\delta$-$n$-ideal of $R$ if and only if $I\\subseteq\\sqrt{0}$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(primary_iff_nil),
        None,
    ),
    claim(
        "prop-prime-iff-nilradical",
        Theorem,
        "A prime I with δ(I) ≠ R is a δ-n-ideal iff I = √0.",
        "if and only if $I=\\sqrt{0}.$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(prime_iff_nilradical),
        None,
    ),
    claim(
        "thm-four-equivalents",
        Theorem,
        "The definition, the colon criterion, the element-ideal test and the ideal-pair test agree on every proper ideal.",
        "$(I:a)\\subseteq\\sqrt{0}$ for all $a\\in R-\\delta(I).$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(four_equivalents),
        None,
    ),
    claim(
        "thm-every-ideal-quasilocal",
        Theorem,
        "When δ(P) ≠ R for every prime P: every proper principal ideal is δ-n ⟺ every proper ideal is δ-n ⟺ √0 is the unique prime ⟺ R is quasi-local with maximal ideal √0.",
        "$\\sqrt{0}$ is the unique prime ideal of $R$.",
        &[S::Ring, S::Expansion],
        Some(every_ideal_quasilocal),
        None,
    ),
    claim(
        "audit-every-ideal-unconditional",
        Audit,
        "Without δ(P) ≠ R the four conditions separate: with the full expansion on ℤ₆ every proper ideal is δ-n, yet ℤ₆ has two primes.",
        "For every expansion function $\\delta$ of ideals of $R$",
        &[S::Ring, S::Expansion],
        None,
        Some(audit_every_ideal),
    ),
    claim(
        "prop-domain-only-zero",
        Theorem,
        "In an integral domain with δ(I) ≠ R for every proper I, {0} is the only δ-n-ideal (finite domains exhaustively, ℤ for n ≤ 1000).",
        "Then $\\{0\\}$ is the only $\\delta$-$n$-ideal of $R$.",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(domain_only_zero),
        Some(domain_only_zero_integers),
    ),
    claim(
        "thm-von-neumann-field",
        Theorem,
        "For δ with δ(0) = 0: R is a field iff R is von Neumann regular and {0} is a δ-n-ideal.",
        "von Neumann\nregular ring and $\\{0\\}$ is a $\\delta$-$n$-ideal",
        &[S::Ring, S::Expansion],
        Some(von_neumann_field),
        None,
    ),
    claim(
        "lem-colon-stability",
        Theorem,
        "If I is δ-n, x ∉ δ(I) and (δ(I):x) ⊆ δ(I:x) ≠ R, then (I:x) is δ-n.",
        "then $(I:x)$ is a $\\delta$-$n$-ideal",
        &[S::Ring, S::Expansion, S::Ideal, S::Element],
        Some(colon_stability),
        None,
    ),
    claim(
        "lem-colon-stability-quasi",
        Theorem,
        "If I is a quasi n-ideal and x ∉ √I, then (I:x) is a quasi n-ideal.",
        "then $(I:x)$ is a\nquasi $n$-ideal of $R$ for all $x\\in R\\backslash\\delta(I)$",
        &[S::Ring, S::Ideal, S::Element],
        Some(colon_stability_quasi),
        None,
    ),
    claim(
        "prop-maximal-is-nilradical",
        Theorem,
        "A maximal δ-n-ideal I with δ(I) ≠ R satisfying the colon condition at every x ∉ δ(I) equals √0, which is prime.",
        "then $I=\\sqrt{0}$ is a prime ideal of\n$R.$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(maximal_is_nilradical),
        None,
    ),
    claim(
        "prop-maximal-quasi-n",
        Theorem,
        "A maximal quasi n-ideal equals √0, which is prime.",
        "if $I$ is a maximal quasi $n$-ideal of $R$, then\n$I=\\sqrt{0}$",
        &[S::Ring, S::Ideal],
        Some(maximal_quasi_n),
        None,
    ),
    claim(
        "audit-maximal-vacuous",
        Audit,
        "When δ(I) = R the colon hypothesis is vacuous: with the full expansion on ℤ₆ the maximal δ-n-ideals are (2) and (3), not √0.",
        "where $x\\in R\\backslash\\delta(I)$, then $I=\\sqrt{0}$",
        &[S::Ring, S::Expansion, S::Ideal],
        None,
        Some(audit_maximal_vacuous),
    ),
    claim(
        "thm-existence-equivalents",
        Theorem,
        "Under the colon condition and δ(I) ≠ R for proper I: some δ-n-ideal exists ⟺ √0 is prime ⟺ √0 is δ-primary.",
        "There exists an $\\delta$-$n$-ideal of $R.$",
        &[S::Ring, S::Expansion],
        Some(existence_equivalents),
        None,
    ),
    claim(
        "audit-existence-vacuous",
        Audit,
        "The colon condition alone does not give the equivalence: on ℤ₆ with δ₊((2)) it holds, (3) is a δ-n-ideal, and √0 is not prime.",
        "with $(\\delta\n(J):x)\\subseteq\\delta(J:x)\\neq R$ for all ideal $J$",
        &[S::Ring, S::Expansion],
        None,
        Some(audit_existence_vacuous),
    ),
    claim(
        "prop-idempotent-colon",
        Theorem,
        "With δ(δ(I)) = δ(I): if I is δ-n and a ∉ √0 then δ(I:a) = δ(I).",
        "then $\\delta\n(I:a)=\\delta(I).$",
        &[S::Ring, S::Expansion, S::Ideal, S::Element],
        Some(idempotent_colon),
        None,
    ),
    claim(
        "prop-idempotent-n-ideal",
        Theorem,
        "With δ(δ(I)) = δ(I) ≠ R: δ(I) is an n-ideal iff δ(I) is a δ-n-ideal.",
        "$\\delta(I)$ is $n$-ideal if and only if $\\delta(I)$ is $\\delta$-$n$-ideal.",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(idempotent_n_ideal),
        None,
    ),
    claim(
        "prop-idempotent-cancel",
        Theorem,
        "If IK = JK with I, J δ-n, δ idempotent at I and J, and K ⊄ √0, then δ(I) = δ(J).",
        "then $\\delta(I)=\\delta(J)$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(idempotent_cancel),
        None,
    ),
    claim(
        "prop-idempotent-product",
        Theorem,
        "If IK and I are δ-n, δ is idempotent at I and IK, and K ⊄ √0, then δ(IK) = δ(I).",
        "then $\\delta(IK)=\\delta(I)$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(idempotent_product),
        None,
    ),
    claim(
        "prop-zero-divisor-criterion",
        Theorem,
        "√0 is δ-n iff every zero divisor of R/√0 lies in δ_q(0).",
        "every zero-divisor of\nthe quotient ring $R/\\sqrt{0}$ is $\\delta_{q}$-nilpotent",
        &[S::Ring, S::Expansion],
        Some(zero_divisor_criterion),
        None,
    ),
    claim(
        "prop-n-ideal-expansion",
        Theorem,
        "If δ(I) is an n-ideal then I is a δ-n-ideal.",
        "If $\\delta(I)$ is an $n$-ideal of $R$, then $I$ is a $\\delta$-$n$-ideal",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(n_ideal_expansion),
        None,
    ),
    claim(
        "prop-n-ideal-expansion-radical",
        Theorem,
        "If I is a δ₁-n-ideal then √I is an n-ideal.",
        "The converse of this inclusion is also true if $\\delta=\\delta_{1}.$",
        &[S::Ring, S::Ideal],
        Some(n_ideal_expansion_radical),
        None,
    ),
    claim(
        "prop-monotone-in-expansion",
        Theorem,
        "If δ ≤ γ pointwise and I is δ-n then I is γ-n.",
        "If $I$ is a\n$\\delta$-$n$-ideal of $R$, then $I$ is a $\\gamma$-$n$-ideal of $R$.",
        &[S::Ring, S::Expansion, S::Expansion, S::Ideal],
        Some(monotone_in_expansion),
        None,
    ),
    claim(
        "prop-composition",
        Theorem,
        "If γ(I) is a δ-n-ideal then I is a δ∘γ-n-ideal.",
        "then $I$ is a\n$\\delta\\circ\\gamma$-$n$-ideal of $R.$",
        &[S::Ring, S::Expansion, S::Expansion, S::Ideal],
        Some(composition),
        None,
    ),
    claim(
        "prop-radical-transfer",
        Theorem,
        "If √δ(I) = δ(√I) and I is δ-n then √I is δ-n.",
        "then $\\sqrt{I}$ is a $\\delta$-$n$-ideal of $R$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(radical_transfer),
        None,
    ),
    claim(
        "prop-quasi-iff-radical-n",
        Theorem,
        "I is a quasi n-ideal iff √I is an n-ideal.",
        "$I$ is a quasi $n$-ideal of $R$ if and only if $\\sqrt{I}$ is a\n$n$-ideal",
        &[S::Ring, S::Ideal],
        Some(quasi_iff_radical_n),
        None,
    ),
    claim(
        "prop-sandwich",
        Theorem,
        "If J ⊆ K ⊆ I are proper, I is δ-n and δ(J) = δ(I), then K is δ-n.",
        "with $J\\subseteq K\\subseteq I$",
        &[S::Ring, S::Expansion, S::Ideal, S::Ideal, S::Ideal],
        Some(sandwich),
        None,
    ),
    claim(
        "prop-int-intersection",
        Theorem,
        "For intersection-preserving δ, the intersection of two δ-n-ideals is δ-n.",
        "then $I=\n{\\displaystyle\\bigcap\\limits_{i=1}^{n}}\nI_{i}$ is a $\\delta$-$n$-ideal",
        &[S::Ring, S::Expansion, S::Ideal, S::Ideal],
        Some(int_intersection),
        None,
    ),
    claim(
        "prop-int-noncomparable",
        Theorem,
        "For intersection-preserving δ with δ(I₁), δ(I₂) non-comparable primes: if I₁ ∩ I₂ is δ-n, so are I₁ and I₂.",
        "non-comparable prime ideals of $R$",
        &[S::Ring, S::Expansion, S::Ideal, S::Ideal],
        Some(int_noncomparable),
        None,
    ),
    claim(
        "example-radical-homomorphism",
        Theorem,
        "Every ring homomorphism is a δ₁γ₁-homomorphism.",
        "A homomorphism from $R\\ $to $S$ is an\nexample of $\\delta_{1}\\gamma_{1}$-homomorphism.",
        &[S::Homomorphism],
        Some(radical_homomorphism),
        None,
    ),
    claim(
        "rem-epimorphism-image",
        Theorem,
        "For a δγ-epimorphism f and I ⊇ ker f: γ(f(I)) = f(δ(I)).",
        "then $\\gamma(f(I))=f(\\delta(I)).$",
        &[S::Homomorphism, S::Expansion, S::Expansion, S::Ideal],
        Some(epimorphism_image),
        None,
    ),
    claim(
        "prop-hom-mono",
        Theorem,
        "For an injective δγ-homomorphism f and a γ-n-ideal J, f⁻¹(J) is δ-n.",
        "then $f^{-1}\\left(  J\\right)  $ is a $\\delta$-$n$-ideal of $R.",
        &[S::Homomorphism, S::Expansion, S::Expansion, S::Ideal],
        Some(hom_mono),
        None,
    ),
    claim(
        "prop-hom-epi",
        Theorem,
        "For a surjective δγ-homomorphism f and a δ-n-ideal I ⊇ ker f, f(I) is γ-n.",
        "$f\\left(  I\\right)  $ is a $\\gamma$-$n$-ideal of $S.$",
        &[S::Homomorphism, S::Expansion, S::Expansion, S::Ideal],
        Some(hom_epi),
        None,
    ),
    claim(
        "def-derived-expansions",
        Theorem,
        "The derived maps δ_q, δ_S, δ_× and δ₍₊₎ satisfy the expansion axioms.",
        "becomes an\nexpansion function of $\\mathcal{I(R/I)}.$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(derived_expansions),
        None,
    ),
    claim(
        "cor-quotient-1",
        Theorem,
        "If J ⊆ I and I is δ-n then I/J is δ_q-n in R/J.",
        "then $I/J$ is a $\\delta_{q}$\n-$n$-ideal of $R/J.$",
        &[S::Ring, S::Expansion, S::Ideal, S::Ideal],
        Some(quotient_1),
        None,
    ),
    claim(
        "cor-quotient-2",
        Theorem,
        "If I/J is δ_q-n and J ⊆ √0 then I is δ-n.",
        "and $J\\subseteq\\sqrt{0_{R}},$\nthen $I$ is a $\\delta$-$n$-ideal of $R.$",
        &[S::Ring, S::Expansion, S::Ideal, S::Ideal],
        Some(quotient_2),
        None,
    ),
    claim(
        "cor-quotient-3",
        Theorem,
        "If I/J is δ_q-n and J is δ-n with δ(J) ≠ R then I is δ-n.",
        "-$n$-ideal of $R$ where $\\delta(J)\\neq R$",
        &[S::Ring, S::Expansion, S::Ideal, S::Ideal],
        Some(quotient_3),
        None,
    ),
    claim(
        "lem-superfluous",
        Theorem,
        "A δ-n-ideal with δ(I) ≠ R is superfluous.",
        "with $\\delta(I)\\neq R$ is superfluous.",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(superfluous),
        None,
    ),
    claim(
        "prop-sum",
        Theorem,
        "If I, J are δ-n with δ(I), δ(J) ≠ R then I+J is a proper δ-n-ideal.",
        "Then $I+J$ is a $\\delta$-$n$-ideal of\n$R$.",
        &[S::Ring, S::Expansion, S::Ideal, S::Ideal],
        Some(sum),
        None,
    ),
    claim(
        "prop-loc-extension",
        Theorem,
        "If I is δ-n with I ∩ S = ∅ then S⁻¹I is δ_S-n.",
        "with $I\\cap S=\\emptyset,$ then\n$S^{-1}I$ is a $\\delta_{S}$-$n$-ideal",
        &[S::Ring, S::MultiplicativeSet, S::Expansion, S::Ideal],
        Some(loc_extension),
        None,
    ),
    claim(
        "prop-loc-contraction",
        Theorem,
        "If S ∩ Z(R) = S ∩ Z_δ(I)(R) = ∅ and S⁻¹I is δ_S-n then I is δ-n.",
        "Let $S\\cap Z(R)=S\\cap Z_{\\delta(I)}(R)=\\emptyset$.",
        &[S::Ring, S::MultiplicativeSet, S::Expansion, S::Ideal],
        Some(loc_contraction),
        None,
    ),
    claim(
        "rem-regular-localization",
        Theorem,
        "If K is a δ_r(R)-n-ideal of the localization at the regular elements, its contraction is δ-n.",
        "then $I^{c}$ is $\\delta$-$n$-ideal of\n$R$",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(regular_localization),
        None,
    ),
    claim(
        "rem-product-ideals-split",
        Theorem,
        "Every ideal of R₁ × R₂ is I₁ × I₂.",
        "Every ideal $I$\nof $R$ is the form of $I=I_{1}\\times I_{2}$",
        &[S::Ring, S::Ideal],
        Some(product_ideals_split),
        None,
    ),
    claim(
        "rem-product-obstruction",
        Theorem,
        "On R₁ × R₂ no ideal I with δ_×(I) ≠ R is a δ_×-n-ideal.",
        "then $R$ has no a\n$\\delta_{\\times}$-$n$-ideal",
        &[S::Ring, S::Expansion, S::Expansion, S::Ideal],
        Some(product_obstruction),
        None,
    ),
    claim(
        "audit-product-obstruction-global",
        Audit,
        "Read globally the remark fails: on ℤ₂ × ℤ₂ with δ_× = δ₀ × full, δ₀ takes proper values yet ℤ₂ × 0 is a δ_×-n-ideal.",
        "If $\\delta\n_{i}(I_{i})\\neq R_{i}$ for some $i\\in\\{1,2\\}$",
        &[S::Ring, S::Expansion, S::Ideal],
        None,
        Some(audit_product_global),
    ),
    claim(
        "def-idealization-product",
        Theorem,
        "The idealization multiplies as (r₁,m₁)(r₂,m₂) = (r₁r₂, r₁m₂ + r₂m₁).",
        "(r_{1},m_{1})(r_{2},m_{2})=(r_{1}r_{2},r_{1}m_{2}+r_{2}m_{1})",
        &[S::Ring, S::Element, S::Element],
        Some(idealization_product),
        None,
    ),
    claim(
        "fact-idealization-ideal-criterion",
        Theorem,
        "I(+)N is an ideal of R(+)M iff IM ⊆ N.",
        "is an ideal of $R(+)M$ if\nand only if $IM\\subseteq N$",
        &[S::Ring, S::Ideal, S::Submodule],
        Some(idealization_ideal_criterion),
        None,
    ),
    claim(
        "fact-idealization-radical",
        Theorem,
        "√(I(+)N) = √I(+)M for every homogeneous ideal.",
        "$\\sqrt{I(+)N}=\\sqrt{I}(+)M$",
        &[S::Ring, S::Ideal, S::Submodule],
        Some(idealization_radical),
        None,
    ),
    claim(
        "prop-idealization-equivalence",
        Theorem,
        "I is δ-n iff I(+)N is δ₍₊₎-n, for every proper I and submodule N with IM ⊆ N.",
        "$I(+)N$\nis a $\\delta_{(+)}$-$n$-ideal of $R(+)M.$",
        &[S::Ring, S::Expansion, S::Ideal, S::Submodule],
        Some(idealization_equivalence),
        None,
    ),
    claim(
        "fact-delta1-idempotent",
        Theorem,
        "The radical expansion is idempotent: δ₁(δ₁(I)) = δ₁(I).",
        "(in particular, let\n$\\delta=\\delta_{1}$)",
        &[S::Ring, S::Ideal],
        Some(delta1_idempotent),
        None,
    ),
    claim(
        "selftest-z6-all-n-ideals",
        SelfTest,
        "Inverted: every proper ideal of ℤ₆ is an n-ideal.",
        "Since $2\\cdot3\\in I$ but neither",
        &[S::Ring, S::Ideal, S::Element],
        None,
        Some(selftest_z6),
    ),
    claim(
        "selftest-primes-are-delta-n",
        SelfTest,
        "Inverted: every prime ideal is a δ-n-ideal.",
        "a prime ideal needs not to be a $\\delta$\n-$n$-ideal",
        &[S::Ring, S::Expansion, S::Ideal],
        Some(selftest_primes),
        None,
    ),
    claim(
        "selftest-spectrum-nonempty",
        SelfTest,
        "Inverted: every ring has a δ-n-ideal for every δ.",
        "There exists an $\\delta$-$n$-ideal of $R.$",
        &[S::Ring, S::Expansion],
        Some(selftest_spectrum),
        None,
    ),
];

// ---- helpers

fn w(inst: &Instance, e: usize) -> Witness {
    Witness::new(&inst.ring).expansion(inst.expansions[e].recipe())
}

fn wi(inst: &Instance, e: usize, i: usize) -> Witness {
    w(inst, e).ideal("I", inst.show(i))
}

/// (e, i) over every expansion and proper ideal.
fn each_proper(inst: &Instance, mut f: impl FnMut(usize, usize)) {
    for e in 0..inst.expansions.len() {
        for i in 0..inst.top() {
            f(e, i);
        }
    }
}

fn ring(spec: RingSpec) -> Ring {
    Ring::new(&spec).expect("fixed ring")
}

fn ideal_of(r: &Ring, gens: &[i64]) -> Ideal {
    let g: Vec<_> = gens.iter().map(|&v| r.int(v)).collect();
    Ideal::from_generators(r, &g).expect("ideal")
}

fn is_dn(i: &Ideal, d: &Expansion) -> bool {
    is_delta_n_ideal(i, d, DeltaNMethod::Definition).expect("proper ideal")
}

// ---- definitions and first examples

fn expansion_axioms(inst: &Instance, t: &mut Tally) {
    let n = inst.len();
    for (e, x) in inst.expansions.iter().enumerate() {
        for i in 0..n {
            t.case(
                true,
                || inst.le(i, x.at(i)) && (0..n).all(|j| !inst.le(i, j) || inst.le(x.at(i), x.at(j))),
                || wi(inst, e, i),
            );
        }
    }
}

/// ab ∈ I ⇒ a ∈ √0 or b ∈ I, straight from the element tables.
fn n_ideal_elementwise(inst: &Instance, i: usize) -> bool {
    let f = inst.f();
    let s = &f.lattice.sets[i];
    f.elements()
        .all(|a| f.elements().all(|b| !s.contains(f.mul(a, b)) || f.nilradical.contains(a) || s.contains(b)))
}

fn delta0_is_n_ideal(inst: &Instance, t: &mut Tally) {
    let d0 = Expansion::delta0(&inst.ring);
    let dn = dn_table(inst.f(), &d0);
    for i in 0..inst.top() {
        t.case(true, || dn[i] == n_ideal_elementwise(inst, i), || {
            Witness::new(&inst.ring).expansion("delta0").ideal("I", inst.show(i))
        });
    }
}

fn n_ideal_is_delta_n(inst: &Instance, t: &mut Tally) {
    each_proper(inst, |e, i| t.case(inst.nid(i), || inst.dn[e][i], || wi(inst, e, i)));
}

fn example_e3_audit(t: &mut Tally) {
    let r = ring(RingSpec::PolyQuotient {
        base: 4,
        modulus: vec![0, 0, 0, 1],
    });
    let el = |c: &[i64]| r.element(&ElemExpr::poly(c.iter().copied())).expect("element");
    let (u, v) = (el(&[1, 1]), el(&[1, 3, 1]));
    let base = || Witness::new(&r);
    t.case(true, || r.mul(&u, &v).expect("same ring") == r.one(), || {
        base().element("a", &u).element("b", &v)
    });
    let j = Ideal::principal(&u).expect("principal");
    t.case(true, || !j.is_proper(), || base().ideal("J", &j));
    let nil = Ideal::zero(&r).radical();
    let two_x = Ideal::from_generators(&r, &[el(&[2]), el(&[0, 1])]).expect("ideal");
    t.case(true, || nil == two_x, || base().ideal("nil", &nil));
    let d = Expansion::delta_plus(&two_x).expect("expansion");
    t.case(true, || !d.apply(&j).expect("apply").is_proper(), || base().expansion(d.recipe()).ideal("J", &j));
    t.case(
        true,
        || matches!(is_delta_n_ideal(&j, &d, DeltaNMethod::Definition), Err(crate::Error::ImproperIdeal(_))),
        || base().expansion(d.recipe()).ideal("J", &j),
    );
    t.note("the source example treats J=(x+1) as a proper delta-n-ideal; the computation gives (1+x)(1+3x+x^2)=1, so J is the whole ring and the example is vacuous");
}

fn subset_nilradical(inst: &Instance, t: &mut Tally) {
    let (nil, top) = (inst.nil(), inst.top());
    each_proper(inst, |e, i| {
        t.case(inst.dn[e][i] && inst.at(e, i) != top, || inst.le(i, nil), || wi(inst, e, i))
    });
}

fn example_z6_zero(t: &mut Tally) {
    let r = Ring::modular(6).expect("Z6");
    let zero = Ideal::zero(&r);
    for d in [Expansion::delta0(&r), Expansion::delta1(&r)] {
        let wit = crate::predicates::delta_n_witness(&zero, &d).expect("proper");
        t.case(
            true,
            || wit.as_ref().is_some_and(|(a, b)| *a == r.int(2) && *b == r.int(3)),
            || {
                let mut w = Witness::new(&r).expansion(d.recipe()).ideal("I", &zero);
                if let Some((a, b)) = &wit {
                    w = w.element("a", a).element("b", b);
                }
                w
            },
        );
    }
}

fn primary_to_n(inst: &Instance, t: &mut Tally) {
    let nil = inst.nil();
    each_proper(inst, |e, i| {
        t.case(inst.le(i, nil) && inst.primary(e, i), || inst.dn[e][i], || wi(inst, e, i))
    });
}

fn nilradical_primary_iff_n(inst: &Instance, t: &mut Tally) {
    let nil = inst.nil();
    for e in 0..inst.expansions.len() {
        t.case(true, || inst.primary(e, nil) == inst.dn[e][nil], || wi(inst, e, nil));
    }
}

fn example_zz_delta_plus(t: &mut Tally) {
    let zz = Ring::integers();
    let (d0, d1) = (Expansion::delta0(&zz), Expansion::delta1(&zz));
    let primes = integers::primes_up_to(PRIME_BOUND);
    for &q in &primes {
        let dp = Expansion::delta_plus(&Ideal::integer(q)).expect("expansion");
        for &p in primes.iter().filter(|&&p| p != q) {
            let i = Ideal::integer(p);
            t.case(
                true,
                || is_dn(&i, &dp) && !is_dn(&i, &d0) && !is_dn(&i, &d1) && !is_n_ideal(&i).expect("proper"),
                || Witness::new(&zz).expansion(dp.recipe()).ideal("I", &i),
            );
        }
    }
}

fn primary_iff_nil(inst: &Instance, t: &mut Tally) {
    let (nil, top) = (inst.nil(), inst.top());
    each_proper(inst, |e, i| {
        t.case(
            inst.primary(e, i) && inst.at(e, i) != top,
            || inst.dn[e][i] == inst.le(i, nil),
            || wi(inst, e, i),
        )
    });
}

fn prime_iff_nilradical(inst: &Instance, t: &mut Tally) {
    let (nil, top) = (inst.nil(), inst.top());
    each_proper(inst, |e, i| {
        t.case(inst.prime[i] && inst.at(e, i) != top, || inst.dn[e][i] == (i == nil), || wi(inst, e, i))
    });
}

fn four_equivalents(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    each_proper(inst, |e, i| {
        let d = inst.at(e, i);
        let v: Vec<bool> = DeltaNMethod::ALL.iter().map(|&m| decide(f, i, d, m)).collect();
        t.case(true, || v.iter().all(|&x| x == v[0]), || {
            let mut w = wi(inst, e, i);
            for (m, x) in DeltaNMethod::ALL.iter().zip(&v) {
                w = w.element(m.name(), x);
            }
            w
        });
    });
}

// ---- rings all of whose ideals are δ-n

/// The four conditions of the every-ideal theorem.
fn every_ideal_conditions(inst: &Instance, e: usize) -> [bool; 4] {
    let f = inst.f();
    let (nil, top) = (inst.nil(), inst.top());
    let principal = f.elements().map(|a| f.lattice.find(&f.principal(a)).expect("ideal"));
    let c1 = principal.filter(|&i| i != top).all(|i| inst.dn[e][i]);
    let c2 = (0..top).all(|i| inst.dn[e][i]);
    let primes: Vec<usize> = (0..top).filter(|&i| inst.prime[i]).collect();
    let c3 = primes == [nil];
    let c4 = f.lattice.maximal() == [nil];
    [c1, c2, c3, c4]
}

fn every_ideal_quasilocal(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    for e in 0..inst.expansions.len() {
        let hyp = (0..top).all(|p| !inst.prime[p] || inst.at(e, p) != top);
        t.case(
            hyp,
            || {
                let c = every_ideal_conditions(inst, e);
                c.iter().all(|&x| x == c[0])
            },
            || {
                let c = every_ideal_conditions(inst, e);
                let mut w = w(inst, e);
                for (k, x) in c.iter().enumerate() {
                    w = w.element(&format!("condition{}", k + 1), x);
                }
                w
            },
        );
    }
}

fn instance_of(spec: RingSpec, recipes: &[Recipe]) -> Instance {
    let r = ring(spec);
    let exps = recipes.iter().map(|x| Expansion::new(&r, x).expect("expansion")).collect();
    Instance::from_parts(r, exps).expect("finite")
}

fn audit_every_ideal(t: &mut Tally) {
    let inst = instance_of(RingSpec::Modular(6), &[Recipe::Full]);
    let c = every_ideal_conditions(&inst, 0);
    t.case(true, || c == [true, true, false, false], || {
        let mut w = w(&inst, 0);
        for (k, x) in c.iter().enumerate() {
            w = w.element(&format!("condition{}", k + 1), x);
        }
        w
    });
    t.note("the unconditional statement fails whenever delta(P) = R for some prime P; thm-every-ideal-quasilocal carries that hypothesis");
}

fn domain_only_zero(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    for e in 0..inst.expansions.len() {
        let keeps = (0..top).all(|i| inst.at(e, i) != top);
        t.case(
            inst.class.is_integral_domain && keeps,
            || (0..top).all(|i| inst.dn[e][i] == (i == 0)),
            || w(inst, e),
        );
    }
}

fn domain_only_zero_integers(t: &mut Tally) {
    let zz = Ring::integers();
    for r in integer_catalog() {
        let d = Expansion::new(&zz, &r).expect("integer expansion");
        let gen = |n: u64| d.apply(&Ideal::integer(n)).expect("apply").integer_generator().unwrap();
        let range = || (0..=INTEGER_BOUND).filter(|&n| n != 1);
        let keeps = range().all(|n| gen(n) != 1);
        let bad = || range().find(|&n| is_dn(&Ideal::integer(n), &d) != (n == 0));
        t.case(keeps, || bad().is_none(), || {
            Witness::new(&zz).expansion(d.recipe()).ideal("I", Ideal::integer(bad().unwrap()))
        });
    }
}

fn von_neumann_field(inst: &Instance, t: &mut Tally) {
    let c = &inst.class;
    for e in 0..inst.expansions.len() {
        t.case(
            inst.at(e, 0) == 0,
            || c.is_field == (c.is_von_neumann_regular && inst.dn[e][0]),
            || w(inst, e),
        );
    }
}

// ---- colon stability, maximal members and existence

fn colon_ok(inst: &Instance, e: usize, i: usize, x: u32) -> bool {
    let f = inst.f();
    let jx = f.colon_of(i, x);
    let djx = inst.at(e, jx);
    inst.le(f.colon_of(inst.at(e, i), x), djx) && djx != inst.top()
}

fn colon_stability(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    each_proper(inst, |e, i| {
        let d = inst.at(e, i);
        for x in f.lattice.sets[d].complement_iter() {
            t.case(
                inst.dn[e][i] && colon_ok(inst, e, i, x),
                || inst.dn[e][f.colon_of(i, x)],
                || wi(inst, e, i).element("x", inst.label(x)),
            );
        }
    });
}

fn quasi_n(inst: &Instance, i: usize) -> bool {
    i != inst.top() && inst.pairs.dn(i, inst.f().radical_of(i))
}

fn colon_stability_quasi(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    for i in 0..inst.top() {
        for x in f.lattice.sets[f.radical_of(i)].complement_iter() {
            t.case(quasi_n(inst, i), || quasi_n(inst, f.colon_of(i, x)), || {
                Witness::new(&inst.ring).expansion("delta1").ideal("I", inst.show(i)).element("x", inst.label(x))
            });
        }
    }
}

/// Maximal members of {i proper : member(i)}.
fn maximal_members(inst: &Instance, member: impl Fn(usize) -> bool) -> Vec<usize> {
    let top = inst.top();
    let all: Vec<usize> = (0..top).filter(|&i| member(i)).collect();
    all.iter()
        .copied()
        .filter(|&i| all.iter().all(|&j| j == i || !inst.le(i, j)))
        .collect()
}

fn maximal_is_nilradical(inst: &Instance, t: &mut Tally) {
    let (nil, top, f) = (inst.nil(), inst.top(), inst.f());
    for e in 0..inst.expansions.len() {
        for i in maximal_members(inst, |i| inst.dn[e][i]) {
            let d = inst.at(e, i);
            let hyp = d != top && f.lattice.sets[d].complement_iter().all(|x| colon_ok(inst, e, i, x));
            t.case(hyp, || i == nil && inst.prime[nil], || wi(inst, e, i));
        }
    }
}

fn maximal_quasi_n(inst: &Instance, t: &mut Tally) {
    let nil = inst.nil();
    for i in maximal_members(inst, |i| quasi_n(inst, i)) {
        t.case(true, || i == nil && inst.prime[nil], || {
            Witness::new(&inst.ring).expansion("delta1").ideal("I", inst.show(i))
        });
    }
}

fn audit_maximal_vacuous(t: &mut Tally) {
    let inst = instance_of(RingSpec::Modular(6), &[Recipe::Full]);
    let max = maximal_members(&inst, |i| inst.dn[0][i]);
    let names: Vec<String> = max.iter().map(|&i| inst.show(i)).collect();
    t.case(true, || names == ["(3)", "(2)"] || names == ["(2)", "(3)"], || {
        let mut w = w(&inst, 0);
        for n in &names {
            w = w.ideal("maximal", n);
        }
        w
    });
    t.note("with delta(I) = R no x lies outside delta(I), so the colon hypothesis holds vacuously; prop-maximal-is-nilradical adds delta(I) != R");
}

fn existence_conditions(inst: &Instance, e: usize) -> [bool; 3] {
    let nil = inst.nil();
    [
        (0..inst.top()).any(|i| inst.dn[e][i]),
        inst.prime[nil],
        inst.primary(e, nil),
    ]
}

fn existence_equivalents(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    for e in 0..inst.expansions.len() {
        let keeps = (0..top).all(|i| inst.at(e, i) != top);
        t.case(
            inst.profiles[e].colon_condition.holds && keeps,
            || {
                let c = existence_conditions(inst, e);
                c[0] == c[1] && c[1] == c[2]
            },
            || w(inst, e),
        );
    }
}

fn audit_existence_vacuous(t: &mut Tally) {
    let inst = instance_of(RingSpec::Modular(6), &[Recipe::DeltaPlus(vec![ElemExpr::int(2)])]);
    let three = ideal_of(&inst.ring, &[3]).idx();
    t.case(
        true,
        || inst.profiles[0].colon_condition.holds && inst.dn[0][three] && !inst.prime[inst.nil()],
        || wi(&inst, 0, three),
    );
    t.note("delta((3)) = R makes the colon hypothesis vacuous at J=(3); thm-existence-equivalents adds delta(I) != R for proper I");
}

// ---- idempotent expansions

fn idem(inst: &Instance, e: usize, i: usize) -> bool {
    inst.at(e, inst.at(e, i)) == inst.at(e, i)
}

fn idempotent_colon(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    each_proper(inst, |e, i| {
        for a in f.nilradical.complement_iter() {
            t.case(
                idem(inst, e, i) && inst.dn[e][i],
                || inst.at(e, f.colon_of(i, a)) == inst.at(e, i),
                || wi(inst, e, i).element("a", inst.label(a)),
            );
        }
    });
}

fn idempotent_n_ideal(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    each_proper(inst, |e, i| {
        let d = inst.at(e, i);
        t.case(idem(inst, e, i) && d != top, || inst.nid(d) == inst.dn[e][d], || wi(inst, e, i))
    });
}

fn idempotent_cancel(inst: &Instance, t: &mut Tally) {
    let (f, nil, n) = (inst.f(), inst.nil(), inst.len());
    each_proper(inst, |e, i| {
        for j in 0..inst.top() {
            for k in 0..n {
                let hyp = idem(inst, e, i)
                    && idem(inst, e, j)
                    && inst.dn[e][i]
                    && inst.dn[e][j]
                    && !inst.le(k, nil)
                    && f.product_of(i, k) == f.product_of(j, k);
                t.case(hyp, || inst.at(e, i) == inst.at(e, j), || {
                    wi(inst, e, i).ideal("J", inst.show(j)).ideal("K", inst.show(k))
                });
            }
        }
    });
}

fn idempotent_product(inst: &Instance, t: &mut Tally) {
    let (f, nil, n) = (inst.f(), inst.nil(), inst.len());
    each_proper(inst, |e, i| {
        for k in 0..n {
            let ik = f.product_of(i, k);
            let hyp = idem(inst, e, i) && inst.dn[e][i] && inst.dn[e][ik] && idem(inst, e, ik) && !inst.le(k, nil);
            t.case(hyp, || inst.at(e, ik) == inst.at(e, i), || wi(inst, e, i).ideal("K", inst.show(k)));
        }
    });
}

fn zero_divisor_criterion(inst: &Instance, t: &mut Tally) {
    let nil = inst.nil();
    let qc = inst.quotient(nil);
    let qf = qc.q.ring.finite().unwrap();
    for e in 0..inst.expansions.len() {
        let nilpotents = &qf.lattice.sets[qc.dq[e].at(0)];
        t.case(true, || inst.dn[e][nil] == qf.zero_divisors.is_subset(nilpotents), || wi(inst, e, nil));
    }
}

// ---- comparing expansions

fn n_ideal_expansion(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    each_proper(inst, |e, i| {
        let d = inst.at(e, i);
        t.case(d != top && inst.nid(d), || inst.dn[e][i], || wi(inst, e, i))
    });
}

fn n_ideal_expansion_radical(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    for i in 0..inst.top() {
        t.case(quasi_n(inst, i), || inst.nid(f.radical_of(i)), || {
            Witness::new(&inst.ring).expansion("delta1").ideal("I", inst.show(i))
        });
    }
}

fn monotone_in_expansion(inst: &Instance, t: &mut Tally) {
    let n = inst.len();
    let m = inst.expansions.len();
    for e in 0..m {
        for g in 0..m {
            let le = (0..n).all(|i| inst.le(inst.at(e, i), inst.at(g, i)));
            for i in 0..inst.top() {
                t.case(le && inst.dn[e][i], || inst.dn[g][i], || {
                    wi(inst, e, i).element("gamma", inst.expansions[g].recipe())
                });
            }
        }
    }
}

fn composition(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    let m = inst.expansions.len();
    for e in 0..m {
        for g in 0..m {
            for i in 0..top {
                let gi = inst.at(g, i);
                t.case(gi != top && inst.dn[e][gi], || inst.pairs.dn(i, inst.at(e, gi)), || {
                    wi(inst, e, i).element("gamma", inst.expansions[g].recipe())
                });
            }
        }
    }
}

fn radical_transfer(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    each_proper(inst, |e, i| {
        let commutes = f.radical_of(inst.at(e, i)) == inst.at(e, f.radical_of(i));
        t.case(commutes && inst.dn[e][i], || inst.dn[e][f.radical_of(i)], || wi(inst, e, i))
    });
}

fn quasi_iff_radical_n(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    for i in 0..inst.top() {
        t.case(true, || quasi_n(inst, i) == inst.nid(f.radical_of(i)), || {
            Witness::new(&inst.ring).ideal("I", inst.show(i))
        });
    }
}

fn sandwich(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    each_proper(inst, |e, i| {
        for k in (0..top).filter(|&k| inst.le(k, i)) {
            for j in (0..top).filter(|&j| inst.le(j, k)) {
                t.case(inst.dn[e][i] && inst.at(e, j) == inst.at(e, i), || inst.dn[e][k], || {
                    wi(inst, e, i).ideal("J", inst.show(j)).ideal("K", inst.show(k))
                });
            }
        }
    });
}

fn int_intersection(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    let top = inst.top();
    for e in 0..inst.expansions.len() {
        let ip = inst.profiles[e].intersection_preserving.holds;
        for i in 0..top {
            for j in i..top {
                t.case(ip && inst.dn[e][i] && inst.dn[e][j], || inst.dn[e][f.meet_idx(i, j)], || {
                    wi(inst, e, i).ideal("J", inst.show(j))
                });
            }
        }
    }
}

fn int_noncomparable(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    let top = inst.top();
    for e in 0..inst.expansions.len() {
        let ip = inst.profiles[e].intersection_preserving.holds;
        for i in 0..top {
            for j in i + 1..top {
                let (di, dj) = (inst.at(e, i), inst.at(e, j));
                let hyp = ip
                    && inst.prime[di]
                    && inst.prime[dj]
                    && !inst.le(di, dj)
                    && !inst.le(dj, di)
                    && inst.dn[e][f.meet_idx(i, j)];
                t.case(hyp, || inst.dn[e][i] && inst.dn[e][j], || wi(inst, e, i).ideal("J", inst.show(j)));
            }
        }
    }
}

// ---- homomorphisms, quotients, localizations

fn radical_homomorphism(inst: &Instance, t: &mut Tally) {
    for h in inst.homs() {
        let pos = |v: &[Expansion]| v.iter().position(|x| *x.recipe() == Recipe::Delta1).unwrap();
        let (d, g) = (pos(&h.src_exps), pos(&h.tgt_exps));
        t.case(true, || h.is_delta_gamma(d, g), || Witness::new(&inst.ring).element("f", &h.name));
    }
}

fn hom_witness(h: &super::corpus::HomCase, d: usize, g: usize) -> Witness {
    Witness::new(h.f.source())
        .expansion(format!("delta={}, gamma={}", h.src_exps[d].recipe(), h.tgt_exps[g].recipe()))
        .element("f", &h.name)
}

fn epimorphism_image(inst: &Instance, t: &mut Tally) {
    for h in inst.homs() {
        let sf = h.f.source().finite().unwrap();
        for d in 0..h.src_exps.len() {
            for g in 0..h.tgt_exps.len() {
                let dg = h.surjective && h.is_delta_gamma(d, g);
                for i in (0..sf.lattice.len()).filter(|&i| sf.lattice.le(h.kernel, i)) {
                    t.case(
                        dg,
                        || h.tgt_exps[g].at(h.img[i]) == h.img[h.src_exps[d].at(i)],
                        || hom_witness(h, d, g).ideal("I", Ideal::from_lattice(h.f.source(), i)),
                    );
                }
            }
        }
    }
}

fn hom_mono(inst: &Instance, t: &mut Tally) {
    for h in inst.homs() {
        let tf = h.f.target().finite().unwrap();
        for d in 0..h.src_exps.len() {
            for g in 0..h.tgt_exps.len() {
                let dg = h.injective && h.is_delta_gamma(d, g);
                for j in 0..tf.lattice.top() {
                    t.case(dg && h.tgt_dn[g][j], || h.src_dn[d][h.pre[j]], || {
                        hom_witness(h, d, g).ideal("J", Ideal::from_lattice(h.f.target(), j))
                    });
                }
            }
        }
    }
}

fn hom_epi(inst: &Instance, t: &mut Tally) {
    for h in inst.homs() {
        let sf = h.f.source().finite().unwrap();
        for d in 0..h.src_exps.len() {
            for g in 0..h.tgt_exps.len() {
                let dg = h.surjective && h.is_delta_gamma(d, g);
                for i in 0..sf.lattice.top() {
                    t.case(dg && sf.lattice.le(h.kernel, i) && h.src_dn[d][i], || h.tgt_dn[g][h.img[i]], || {
                        hom_witness(h, d, g).ideal("I", Ideal::from_lattice(h.f.source(), i))
                    });
                }
            }
        }
    }
}

/// Both expansion axioms on a table; the first offending ideal index.
fn axiom_violation(r: &Ring, x: &Expansion) -> Option<usize> {
    let lat = &r.finite().unwrap().lattice;
    let n = lat.len();
    (0..n).find(|&i| !lat.le(i, x.at(i)) || (0..n).any(|j| lat.le(i, j) && !lat.le(x.at(i), x.at(j))))
}

fn derived_expansions(inst: &Instance, t: &mut Tally) {
    let mut check = |r: &Ring, x: &Expansion| {
        let bad = axiom_violation(r, x);
        t.case(true, || bad.is_none(), || {
            Witness::new(r).expansion(x.recipe()).ideal("I", Ideal::from_lattice(r, bad.unwrap()))
        });
    };
    for c in inst.quotients() {
        c.dq.iter().for_each(|x| check(&c.q.ring, x));
    }
    for c in inst.localizations() {
        c.ds.iter().for_each(|x| check(c.loc.ring(), x));
    }
    for x in product_expansions(inst).iter().chain(&idealization_expansions(inst)) {
        check(&inst.ring, x);
    }
}

fn quotient_cases(inst: &Instance, mut f: impl FnMut(&super::corpus::QuotientCase, usize, usize, usize)) {
    for c in inst.quotients() {
        for e in 0..inst.expansions.len() {
            for i in (0..inst.top()).filter(|&i| inst.le(c.j, i)) {
                f(c, e, i, c.image[i].unwrap());
            }
        }
    }
}

fn qw(inst: &Instance, c: &super::corpus::QuotientCase, e: usize, i: usize) -> Witness {
    wi(inst, e, i).ideal("J", inst.show(c.j))
}

fn quotient_1(inst: &Instance, t: &mut Tally) {
    quotient_cases(inst, |c, e, i, q| t.case(inst.dn[e][i], || c.dn[e][q], || qw(inst, c, e, i)));
}

fn quotient_2(inst: &Instance, t: &mut Tally) {
    let nil = inst.nil();
    quotient_cases(inst, |c, e, i, q| {
        t.case(c.dn[e][q] && inst.le(c.j, nil), || inst.dn[e][i], || qw(inst, c, e, i))
    });
}

fn quotient_3(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    quotient_cases(inst, |c, e, i, q| {
        let hyp = c.dn[e][q] && inst.dn[e][c.j] && inst.at(e, c.j) != top;
        t.case(hyp, || inst.dn[e][i], || qw(inst, c, e, i))
    });
}

fn superfluous(inst: &Instance, t: &mut Tally) {
    let (f, top) = (inst.f(), inst.top());
    each_proper(inst, |e, i| {
        t.case(inst.dn[e][i] && inst.at(e, i) != top, || f.is_superfluous_idx(i), || wi(inst, e, i))
    });
}

fn sum(inst: &Instance, t: &mut Tally) {
    let (f, top) = (inst.f(), inst.top());
    for e in 0..inst.expansions.len() {
        let good = |i: usize| inst.dn[e][i] && inst.at(e, i) != top;
        for i in 0..top {
            for j in i..top {
                let s = f.sum_idx(i, j);
                t.case(good(i) && good(j), || s != top && inst.dn[e][s], || {
                    wi(inst, e, i).ideal("J", inst.show(j))
                });
            }
        }
    }
}

fn loc_witness(inst: &Instance, c: &super::corpus::LocalizationCase, e: usize, i: usize) -> Witness {
    wi(inst, e, i).element("S", &c.s)
}

fn loc_extension(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    for c in inst.localizations() {
        each_proper(inst, |e, i| {
            let disjoint = !f.lattice.sets[i].intersects(&c.s.set);
            t.case(inst.dn[e][i] && disjoint, || c.dn[e][c.extend[i]], || loc_witness(inst, c, e, i))
        });
    }
}

fn loc_contraction(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    for c in inst.localizations() {
        let avoids_zd = !c.s.set.intersects(&f.zero_divisors);
        let ltop = c.loc.ring().finite().unwrap().lattice.top();
        each_proper(inst, |e, i| {
            let d = inst.at(e, i);
            let z = if d == inst.top() {
                ElemSet::empty(f.size)
            } else {
                f.z_set(&f.lattice.sets[d])
            };
            let k = c.extend[i];
            let hyp = avoids_zd && !c.s.set.intersects(&z) && k != ltop && c.dn[e][k];
            t.case(hyp, || inst.dn[e][i], || loc_witness(inst, c, e, i))
        });
    }
}

fn regular_localization(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    let regular = ElemSet::from_indices(f.size, f.elements().filter(|&a| !f.zero_divisors.contains(a)));
    for c in inst.localizations().iter().filter(|c| c.s.set == regular) {
        let lt = c.loc.ring().finite().unwrap().lattice.top();
        for e in 0..inst.expansions.len() {
            for k in 0..lt {
                t.case(c.dn[e][k], || inst.dn[e][c.contract[k]], || {
                    w(inst, e).ideal("K", Ideal::from_lattice(c.loc.ring(), k))
                });
            }
        }
    }
}

// ---- products and idealizations

fn product_ideals_split(inst: &Instance, t: &mut Tally) {
    let Some(p) = ProductRing::of(&inst.ring) else { return };
    for i in 0..inst.len() {
        let k = Ideal::from_lattice(&inst.ring, i);
        t.case(true, || matches!(p.split(&k), Ok(Some(_))), || {
            Witness::new(&inst.ring).ideal("I", &k)
        });
    }
}

/// The instance's product expansions, or every pair of component catalog
/// expansions when it lists none.
fn product_expansions(inst: &Instance) -> Vec<Expansion> {
    let Some(p) = ProductRing::of(&inst.ring) else { return Vec::new() };
    let listed: Vec<Expansion> = inst
        .expansions
        .iter()
        .filter(|x| matches!(x.recipe(), Recipe::Product(..)))
        .cloned()
        .collect();
    if !listed.is_empty() {
        return listed;
    }
    let bind = |r: &Ring| -> Vec<Expansion> {
        catalog(r).unwrap().iter().map(|x| Expansion::new(r, x).unwrap()).collect()
    };
    let (ls, rs) = (bind(&p.left), bind(&p.right));
    let mut out = Vec::new();
    for a in &ls {
        for b in &rs {
            out.push(a.product_on(b, &p).expect("product expansion"));
        }
    }
    out
}

fn product_obstruction(inst: &Instance, t: &mut Tally) {
    let top = inst.top();
    for x in product_expansions(inst) {
        for i in 0..top {
            t.case(x.at(i) != top, || !inst.pairs.dn(i, x.at(i)), || {
                Witness::new(&inst.ring).expansion(x.recipe()).ideal("I", inst.show(i))
            });
        }
    }
}

fn audit_product_global(t: &mut Tally) {
    let spec = RingSpec::Product(Box::new(RingSpec::Modular(2)), Box::new(RingSpec::Modular(2)));
    let inst = instance_of(spec, &[Recipe::Product(Box::new(Recipe::Delta0), Box::new(Recipe::Full))]);
    let r = &inst.ring;
    let i = Ideal::from_generators(r, &[r.element(&crate::dsl::parse_element("(1,0)").unwrap()).unwrap()]).unwrap();
    t.case(true, || inst.dn[0][i.idx()] && inst.at(0, i.idx()) == inst.top(), || wi(&inst, 0, i.idx()));
    t.note("a delta_x-n-ideal always has delta_x(I) = R; rem-product-obstruction checks that per-ideal reading");
}

fn idealization_product(inst: &Instance, t: &mut Tally) {
    let Some(id) = Idealization::of(&inst.ring) else { return };
    let (f, m) = (inst.f(), id.module());
    let bf = id.base().finite().unwrap();
    let ms = m.size() as u32;
    for a in f.elements() {
        for b in f.elements() {
            let (r1, m1, r2, m2) = (a / ms, a % ms, b / ms, b % ms);
            let expect = bf.mul(r1, r2) * ms + m.add(m.act(r1, m2), m.act(r2, m1));
            t.case(true, || f.mul(a, b) == expect, || {
                Witness::new(&inst.ring).element("a", inst.label(a)).element("b", inst.label(b))
            });
        }
    }
}

fn idealization_ideal_criterion(inst: &Instance, t: &mut Tally) {
    let Some(id) = Idealization::of(&inst.ring) else { return };
    let f = inst.f();
    let m = id.module();
    let ms = m.size() as u32;
    for i in crate::ideal::enumerate_ideals(id.base()).unwrap() {
        let im = m.ideal_times(&i).unwrap();
        for n in m.submodules() {
            let set = ElemSet::from_indices(f.size, i.set().iter().flat_map(|r| n.set.iter().map(move |x| r * ms + x)));
            t.case(true, || f.is_ideal(&set) == im.is_subset(&n), || {
                Witness::new(&inst.ring).ideal("I", &i).element("N", format!("{{{}}}", n.labels().join(",")))
            });
        }
    }
}

fn idealization_radical(inst: &Instance, t: &mut Tally) {
    let Some(id) = Idealization::of(&inst.ring) else { return };
    let f = inst.f();
    let full = id.module().full();
    for (i, n) in id.homogeneous_pairs().unwrap() {
        let k = id.homogeneous_ideal(&i, &n).unwrap();
        let want = id.homogeneous_ideal(&i.radical(), &full).unwrap();
        t.case(true, || f.radical_of(k.idx()) == want.idx(), || Witness::new(&inst.ring).ideal("K", &k));
    }
}

/// (δ on the base, δ₍₊₎ on the instance) from listed idealization recipes,
/// or from the base catalog.
fn idealization_pairs(inst: &Instance) -> Vec<(Expansion, Expansion)> {
    let Some(id) = Idealization::of(&inst.ring) else { return Vec::new() };
    let base = id.base();
    let listed: Vec<Recipe> = inst
        .expansions
        .iter()
        .filter_map(|x| match x.recipe() {
            Recipe::Idealization(r) => Some((**r).clone()),
            _ => None,
        })
        .collect();
    let recipes = if listed.is_empty() { catalog(base).unwrap() } else { listed };
    recipes
        .iter()
        .map(|r| {
            let d = Expansion::new(base, r).expect("base expansion");
            let up = d.idealization_on(&id).expect("idealization expansion");
            (d, up)
        })
        .collect()
}

fn idealization_expansions(inst: &Instance) -> Vec<Expansion> {
    idealization_pairs(inst).into_iter().map(|(_, up)| up).collect()
}

fn idealization_equivalence(inst: &Instance, t: &mut Tally) {
    let Some(id) = Idealization::of(&inst.ring) else { return };
    let bf = id.base().finite().unwrap();
    let pairs = id.homogeneous_pairs().unwrap();
    for (d, up) in idealization_pairs(inst) {
        let base_dn = dn_table(bf, &d);
        for (i, n) in pairs.iter().filter(|(i, _)| i.is_proper()) {
            let k = id.homogeneous_ideal(i, n).unwrap().idx();
            t.case(true, || base_dn[i.idx()] == inst.pairs.dn(k, up.at(k)), || {
                Witness::new(&inst.ring)
                    .expansion(up.recipe())
                    .ideal("I", i)
                    .element("N", format!("{{{}}}", n.labels().join(",")))
            });
        }
    }
}

fn delta1_idempotent(inst: &Instance, t: &mut Tally) {
    let f = inst.f();
    for i in 0..inst.len() {
        let r = f.radical_of(i);
        t.case(true, || f.radical_of(r) == r, || Witness::new(&inst.ring).ideal("I", inst.show(i)));
    }
}

// ---- self-tests

fn selftest_z6(t: &mut Tally) {
    let r = Ring::modular(6).unwrap();
    for i in crate::ideal::enumerate_ideals(&r).unwrap().into_iter().filter(|i| i.is_proper()) {
        let wit = n_ideal_witness(&i).unwrap();
        t.case(true, || wit.is_none(), || {
            let (a, b) = wit.clone().unwrap();
            Witness::new(&r).ideal("I", &i).element("a", a).element("b", b)
        });
    }
}

fn selftest_primes(inst: &Instance, t: &mut Tally) {
    each_proper(inst, |e, i| t.case(inst.prime[i], || inst.dn[e][i], || wi(inst, e, i)));
}

fn selftest_spectrum(inst: &Instance, t: &mut Tally) {
    for e in 0..inst.expansions.len() {
        let spec = delta_n_spectrum(&inst.ring, &inst.expansions[e]).unwrap();
        t.case(true, || !spec.all.is_empty(), || w(inst, e));
    }
}

#[allow(dead_code)]
fn unused_guard(i: &Ideal, d: &Expansion) -> bool {
    is_delta_primary(i, d).unwrap_or(false)
}
