//! Construction recipes for rings and the element notation they share with the DSL.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// How a ring is built. Two rings are the same ring exactly when their
/// recipes print identically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    /// ℤ/nℤ.
    Modular(u64),
    /// (ℤ/nℤ)[x]/(f). `modulus` holds coefficients of f, lowest degree first.
    PolyQuotient { base: u64, modulus: Vec<u64> },
    Product(Box<RingSpec>, Box<RingSpec>),
    /// The symbolic ring of integers.
    Integers,
    Quotient { base: Box<RingSpec>, gens: Vec<ElemExpr> },
    Idealization { base: Box<RingSpec>, module: ModuleSpec },
    Localization { base: Box<RingSpec>, set: Vec<ElemExpr> },
}

/// A module over some base ring, described relative to that ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    /// The ring as a module over itself.
    Regular,
    /// R/I for the ideal generated by the listed elements.
    QuotientModule(Vec<ElemExpr>),
    Product(Box<ModuleSpec>, Box<ModuleSpec>),
}

/// Backend-independent element notation.
///
/// Integers and residues are constant polynomials; product and idealization
/// elements are pairs; localization elements are fractions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElemExpr {
    /// Coefficients, lowest degree first. Never empty.
    Poly(Vec<BigInt>),
    Pair(Box<ElemExpr>, Box<ElemExpr>),
    Frac(Box<ElemExpr>, Box<ElemExpr>),
}

impl ElemExpr {
    pub fn int(v: impl Into<BigInt>) -> Self {
        ElemExpr::Poly(vec![v.into()])
    }

    pub fn pair(a: ElemExpr, b: ElemExpr) -> Self {
        ElemExpr::Pair(Box::new(a), Box::new(b))
    }

    pub fn frac(a: ElemExpr, b: ElemExpr) -> Self {
        ElemExpr::Frac(Box::new(a), Box::new(b))
    }

    /// Build from coefficients, trimming trailing zeros.
    pub fn poly(coeffs: impl IntoIterator<Item = impl Into<BigInt>>) -> Self {
        let mut c: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while c.len() > 1 && c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if c.is_empty() {
            c.push(BigInt::zero());
        }
        ElemExpr::Poly(c)
    }

    /// The integer value of a constant expression.
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            ElemExpr::Poly(c) if c.iter().skip(1).all(|x| x.is_zero()) => c.first(),
            _ => None,
        }
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], descending: bool) -> fmt::Result {
    let mut terms: Vec<(usize, &BigInt)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    if terms.is_empty() {
        return write!(f, "0");
    }
    if descending {
        terms.reverse();
    }
    for (k, (deg, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { "-" } else { "+" })?;
        }
        let mag = c.abs();
        match deg {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "x")?;
                if deg > 1 {
                    write!(f, "^{deg}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for ElemExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemExpr::Poly(c) => write_poly(f, c, false),
            ElemExpr::Pair(a, b) => write!(f, "({a},{b})"),
            ElemExpr::Frac(a, b) => write!(f, "{a}/{b}"),
        }
    }
}

pub(crate) fn fmt_gens(gens: &[ElemExpr]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("({})", parts.join(","))
}

impl RingSpec {
    fn is_binary(&self) -> bool {
        matches!(self, RingSpec::Product(..) | RingSpec::Idealization { .. })
    }

    fn write_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_binary() {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

struct ModuleDisplay<'a> {
    base: &'a RingSpec,
    module: &'a ModuleSpec,
}

impl ModuleSpec {
    /// Recipe text of this module over `base`, as it appears after `(+)`.
    pub fn display_over(&self, base: &RingSpec) -> String {
        ModuleDisplay { base, module: self }.to_string()
    }
}

impl fmt::Display for ModuleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.module {
            ModuleSpec::Regular => self.base.write_operand(f),
            ModuleSpec::QuotientModule(gens) => {
                write!(f, "quot({}, {})", self.base, fmt_gens(gens))
            }
            ModuleSpec::Product(a, b) => write!(
                f,
                "({} x {})",
                ModuleDisplay { base: self.base, module: a },
                ModuleDisplay { base: self.base, module: b }
            ),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Modular(n) => write!(f, "Z{n}"),
            RingSpec::PolyQuotient { base, modulus } => {
                let c: Vec<BigInt> = modulus.iter().map(|&v| BigInt::from(v)).collect();
                write!(f, "Z{base}[x]/(")?;
                write_poly(f, &c, true)?;
                write!(f, ")")
            }
            RingSpec::Product(a, b) => {
                a.write_operand(f)?;
                write!(f, " x ")?;
                b.write_operand(f)
            }
            RingSpec::Integers => write!(f, "ZZ"),
            RingSpec::Quotient { base, gens } => write!(f, "quot({base}, {})", fmt_gens(gens)),
            RingSpec::Idealization { base, module } => {
                base.write_operand(f)?;
                write!(f, " (+) {}", ModuleDisplay { base, module })
            }
            RingSpec::Localization { base, set } => {
                let parts: Vec<String> = set.iter().map(|g| g.to_string()).collect();
                write!(f, "loc({base}, {{{}}})", parts.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_notation() {
        assert_eq!(ElemExpr::poly([1, 3, 1]).to_string(), "1+3x+x^2");
        assert_eq!(ElemExpr::poly([0, 0, 0]).to_string(), "0");
        assert_eq!(ElemExpr::poly([0, 1]).to_string(), "x");
        assert_eq!(ElemExpr::int(-7).to_string(), "-7");
    }

    #[test]
    fn recipe_notation() {
        let r = RingSpec::PolyQuotient {
            base: 2,
            modulus: vec![1, 1, 1],
        };
        assert_eq!(r.to_string(), "Z2[x]/(x^2+x+1)");
        let p = RingSpec::Product(
            Box::new(RingSpec::Product(
                Box::new(RingSpec::Modular(2)),
                Box::new(RingSpec::Modular(2)),
            )),
            Box::new(RingSpec::Modular(3)),
        );
        assert_eq!(p.to_string(), "(Z2 x Z2) x Z3");
        let i = RingSpec::Idealization {
            base: Box::new(RingSpec::Modular(8)),
            module: ModuleSpec::QuotientModule(vec![ElemExpr::int(4)]),
        };
        assert_eq!(i.to_string(), "Z8 (+) quot(Z8, (4))");
    }
}
