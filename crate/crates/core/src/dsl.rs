//! The ring / element / expansion specification language.
//!
//! ```text
//! ring      := term { ("x" | "(+)") term }            left-associative
//! term      := "ZZ" | "Z" int [ "[x]/(" poly ")" ] | "quot(" ring "," ideal ")"
//!            | "loc(" ring "," "{" elem {"," elem} "}" ")" | "(" ring ")"
//! poly      := symbolic polynomial in x | "[" int {"," int} "]"   (lowest degree first)
//! ideal     := "(" elem {"," elem} ")"
//! elem      := atom [ "/" atom ]
//! atom      := polynomial in x | "(" elem "," elem ")" | "(" elem ")"
//! expansion := single { "o" single }                  right-associative
//! single    := "d0" | "d1" | "full" | "d+(" ideal ")" | "d*(" ideal ")" | "(" expansion ")"
//! ```
//!
//! The module after `(+)` is written as a ring: the base ring itself,
//! `quot(base, ideal)`, or a parenthesized product of these. Expansion
//! recipe text such as `delta_plus(gens=[3])` is accepted as well.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::expansion::Recipe;
use crate::ring::{ElemExpr, ModuleSpec, RingSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
    pub message: Option<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        if let Some(m) = &self.message {
            return write!(f, "{m}");
        }
        write!(f, "expected {}, found {}", self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = std::result::Result<T, ParseError>;

/// A ring together with the expansions listed after it, as in a corpus file
/// line `ring ; expansion ; expansion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecAst {
    pub ring: RingSpec,
    pub expansions: Vec<Recipe>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    far: usize,
    expected: BTreeSet<String>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            pos: 0,
            far: 0,
            expected: BTreeSet::new(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn ws(&mut self) {
        let t = self.rest();
        self.pos += t.len() - t.trim_start().len();
    }

    fn expect_note(&mut self, what: &str) {
        if self.pos > self.far {
            self.far = self.pos;
            self.expected.clear();
        }
        if self.pos == self.far {
            self.expected.insert(what.to_string());
        }
    }

    /// Consume `tok` after optional whitespace.
    fn eat(&mut self, tok: &str) -> bool {
        self.ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            self.expect_note(&format!("`{tok}`"));
            false
        }
    }

    fn error(&self) -> ParseError {
        let at = self.far.max(self.pos);
        let (line, column) = line_col(self.src, at);
        let found = match self.src[at..].chars().next() {
            None => "end of input".to_string(),
            Some(c) => format!("`{c}`"),
        };
        ParseError {
            offset: at,
            line,
            column,
            expected: self.expected.iter().cloned().collect(),
            found,
            message: None,
        }
    }

    fn fail<T>(&self) -> PResult<T> {
        Err(self.error())
    }

    fn semantic<T>(&self, at: usize, msg: String) -> PResult<T> {
        let (line, column) = line_col(self.src, at);
        Err(ParseError {
            offset: at,
            line,
            column,
            expected: Vec::new(),
            found: String::new(),
            message: Some(msg),
        })
    }

    fn need(&mut self, tok: &str) -> PResult<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.fail()
        }
    }

    fn int(&mut self) -> PResult<BigInt> {
        self.ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            self.expect_note("integer");
            return self.fail();
        }
        let v = self.rest()[..digits].parse().unwrap();
        self.pos += digits;
        Ok(v)
    }

    fn small_int(&mut self) -> PResult<u64> {
        let at = self.pos;
        let v = self.int()?;
        match v.to_u64() {
            Some(n) => Ok(n),
            None => self.semantic(at, format!("integer {v} is too large")),
        }
    }

    fn end(&mut self) -> PResult<()> {
        self.ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.expect_note("end of input");
            self.fail()
        }
    }

    // ---- rings

    fn ring(&mut self) -> PResult<RingSpec> {
        let mut acc = self.ring_term()?;
        loop {
            if self.eat("(+)") {
                let at = self.pos;
                let m = self.ring_term()?;
                let module = match to_module(&acc, &m) {
                    Some(module) => module,
                    None => {
                        return self.semantic(
                            at,
                            format!("module `{m}` must be {acc}, quot({acc}, ...) or a product of these"),
                        )
                    }
                };
                acc = RingSpec::Idealization {
                    base: Box::new(acc),
                    module,
                };
            } else if self.product_op() {
                let rhs = self.ring_term()?;
                acc = RingSpec::Product(Box::new(acc), Box::new(rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    /// The product operator `x`, not followed by an identifier character.
    fn product_op(&mut self) -> bool {
        self.ws();
        let r = self.rest().as_bytes();
        if r.first() == Some(&b'x') && !r.get(1).is_some_and(|c| c.is_ascii_lowercase() || *c == b'_') {
            self.pos += 1;
            true
        } else {
            self.expect_note("`x`");
            false
        }
    }

    fn ring_term(&mut self) -> PResult<RingSpec> {
        if self.eat("ZZ") {
            return Ok(RingSpec::Integers);
        }
        if self.eat("Z") {
            let at = self.pos;
            let n = self.small_int()?;
            if n < 2 {
                return self.semantic(at, format!("Z{n}: modulus must be at least 2"));
            }
            if self.eat("[x]/(") {
                let coeffs = self.poly_or_list()?;
                self.need(")")?;
                let modulus = coeffs
                    .iter()
                    .map(|c| c.mod_floor(&BigInt::from(n)).to_u64().unwrap())
                    .collect();
                return Ok(RingSpec::PolyQuotient { base: n, modulus });
            }
            return Ok(RingSpec::Modular(n));
        }
        if self.eat("quot(") {
            let base = self.ring()?;
            self.need(",")?;
            let gens = self.ideal()?;
            self.need(")")?;
            return Ok(RingSpec::Quotient {
                base: Box::new(base),
                gens,
            });
        }
        if self.eat("loc(") {
            let base = self.ring()?;
            self.need(",")?;
            self.need("{")?;
            let set = self.elem_list("}")?;
            self.need(")")?;
            return Ok(RingSpec::Localization {
                base: Box::new(base),
                set,
            });
        }
        if self.eat("(") {
            let r = self.ring()?;
            self.need(")")?;
            return Ok(r);
        }
        self.fail()
    }

    fn poly_or_list(&mut self) -> PResult<Vec<BigInt>> {
        if self.eat("[") {
            let mut out = vec![self.signed_int()?];
            while self.eat(",") {
                out.push(self.signed_int()?);
            }
            self.need("]")?;
            return Ok(out);
        }
        self.poly()
    }

    fn signed_int(&mut self) -> PResult<BigInt> {
        let neg = self.eat("-");
        let v = self.int()?;
        Ok(if neg { -v } else { v })
    }

    // ---- elements

    /// Polynomial in x with integer coefficients, lowest degree first.
    fn poly(&mut self) -> PResult<Vec<BigInt>> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut first = true;
        loop {
            let sign = if self.eat("-") {
                -1
            } else if first || self.eat("+") {
                1
            } else {
                break;
            };
            let (c, deg) = self.mono()?;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, BigInt::zero());
            }
            coeffs[deg] += c * sign;
            first = false;
        }
        Ok(coeffs)
    }

    /// `c`, `x`, `x^k`, `cx^k`, `c*x^k`.
    fn mono(&mut self) -> PResult<(BigInt, usize)> {
        self.ws();
        let has_int = self.rest().starts_with(|c: char| c.is_ascii_digit());
        let c = if has_int { self.int()? } else { BigInt::from(1) };
        if has_int {
            self.eat("*");
        }
        if self.eat("x") {
            if self.eat("^") {
                let at = self.pos;
                let k = self.small_int()?;
                if k > 64 {
                    return self.semantic(at, format!("exponent {k} is too large"));
                }
                return Ok((c, k as usize));
            }
            return Ok((c, 1));
        }
        if !has_int {
            self.expect_note("integer");
            return self.fail();
        }
        Ok((c, 0))
    }

    fn elem(&mut self) -> PResult<ElemExpr> {
        let a = self.elem_atom()?;
        if self.eat("/") {
            let b = self.elem_atom()?;
            return Ok(ElemExpr::frac(a, b));
        }
        Ok(a)
    }

    fn elem_atom(&mut self) -> PResult<ElemExpr> {
        if self.eat("(") {
            let a = self.elem()?;
            if self.eat(",") {
                let b = self.elem()?;
                self.need(")")?;
                return Ok(ElemExpr::pair(a, b));
            }
            self.need(")")?;
            return Ok(a);
        }
        Ok(ElemExpr::poly(self.poly()?))
    }

    fn elem_list(&mut self, close: &str) -> PResult<Vec<ElemExpr>> {
        let mut out = vec![self.elem()?];
        while self.eat(",") {
            out.push(self.elem()?);
        }
        self.need(close)?;
        Ok(out)
    }

    fn ideal(&mut self) -> PResult<Vec<ElemExpr>> {
        self.need("(")?;
        self.elem_list(")")
    }

    /// `"(" ideal ")"`, or a bare ideal as in `d+(3)`.
    fn wrapped_ideal(&mut self) -> PResult<Vec<ElemExpr>> {
        let start = self.pos;
        let wrapped = self.need("(").and_then(|_| self.ideal()).and_then(|g| self.need(")").map(|_| g));
        if wrapped.is_ok() {
            return wrapped;
        }
        self.pos = start;
        self.ideal()
    }

    // ---- expansions

    fn expansion(&mut self) -> PResult<Recipe> {
        let head = self.expansion_single()?;
        if self.compose_op() {
            let tail = self.expansion()?;
            return Ok(Recipe::Compose(Box::new(head), Box::new(tail)));
        }
        Ok(head)
    }

    fn compose_op(&mut self) -> bool {
        self.ws();
        let r = self.rest().as_bytes();
        if r.first() == Some(&b'o') && !r.get(1).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
            self.pos += 1;
            true
        } else {
            self.expect_note("`o`");
            false
        }
    }

    fn expansion_single(&mut self) -> PResult<Recipe> {
        for (tok, r) in [("d0", Recipe::Delta0), ("d1", Recipe::Delta1), ("delta0", Recipe::Delta0), ("delta1", Recipe::Delta1)] {
            if self.word(tok) {
                return Ok(r);
            }
        }
        if self.word("full") {
            return Ok(Recipe::Full);
        }
        if self.eat("d+") {
            return Ok(Recipe::DeltaPlus(self.wrapped_ideal()?));
        }
        if self.eat("d*") {
            return Ok(Recipe::DeltaStar(self.wrapped_ideal()?));
        }
        if self.eat("delta_plus(gens=[") {
            return Ok(Recipe::DeltaPlus(self.elem_list("])")?));
        }
        if self.eat("delta_star(gens=[") {
            return Ok(Recipe::DeltaStar(self.elem_list("])")?));
        }
        for (tok, two) in [("compose(", true), ("product(", true), ("quotient(", false), ("idealization(", false), ("localized(", false)] {
            if self.eat(tok) {
                let a = self.expansion()?;
                let r = if two {
                    self.need(",")?;
                    let b = self.expansion()?;
                    if tok == "compose(" {
                        Recipe::Compose(Box::new(a), Box::new(b))
                    } else {
                        Recipe::Product(Box::new(a), Box::new(b))
                    }
                } else {
                    match tok {
                        "quotient(" => Recipe::Quotient(Box::new(a)),
                        "idealization(" => Recipe::Idealization(Box::new(a)),
                        _ => Recipe::Localized(Box::new(a)),
                    }
                };
                self.need(")")?;
                return Ok(r);
            }
        }
        if self.eat("(") {
            let e = self.expansion()?;
            self.need(")")?;
            return Ok(e);
        }
        self.fail()
    }

    /// A keyword not followed by an identifier character.
    fn word(&mut self, w: &str) -> bool {
        self.ws();
        let r = self.rest();
        if r.starts_with(w) && !r[w.len()..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_' || c == '(') {
            self.pos += w.len();
            true
        } else {
            self.expect_note(&format!("`{w}`"));
            false
        }
    }
}

fn line_col(src: &str, at: usize) -> (usize, usize) {
    let before = &src[..at];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().unwrap().chars().count() + 1;
    (line, column)
}

fn to_module(base: &RingSpec, m: &RingSpec) -> Option<ModuleSpec> {
    if m == base {
        return Some(ModuleSpec::Regular);
    }
    match m {
        RingSpec::Quotient { base: b, gens } if **b == *base => Some(ModuleSpec::QuotientModule(gens.clone())),
        RingSpec::Product(a, b) => Some(ModuleSpec::Product(
            Box::new(to_module(base, a)?),
            Box::new(to_module(base, b)?),
        )),
        _ => None,
    }
}

fn whole<T>(text: &str, f: impl FnOnce(&mut Parser) -> PResult<T>) -> PResult<T> {
    let mut p = Parser::new(text);
    let v = f(&mut p)?;
    p.end()?;
    Ok(v)
}

pub fn parse_ring(text: &str) -> PResult<RingSpec> {
    whole(text, |p| p.ring())
}

pub fn parse_element(text: &str) -> PResult<ElemExpr> {
    whole(text, |p| p.elem())
}

/// An ideal written as a generator list `(g1, g2, ...)`.
pub fn parse_ideal(text: &str) -> PResult<Vec<ElemExpr>> {
    whole(text, |p| p.ideal())
}

pub fn parse_expansion(text: &str) -> PResult<Recipe> {
    whole(text, |p| p.expansion())
}

/// `ring [; expansion]*`.
pub fn parse_spec(text: &str) -> PResult<SpecAst> {
    whole(text, |p| {
        let ring = p.ring()?;
        let mut expansions = Vec::new();
        while p.eat(";") {
            expansions.push(p.expansion()?);
        }
        Ok(SpecAst { ring, expansions })
    })
}

/// Canonical text of an expansion in the short DSL form.
pub fn print_expansion(r: &Recipe) -> String {
    let gens = |g: &[ElemExpr]| crate::ring::spec::fmt_gens(g);
    match r {
        Recipe::Delta0 => "d0".into(),
        Recipe::Delta1 => "d1".into(),
        Recipe::Full => "full".into(),
        Recipe::DeltaPlus(g) => format!("d+({})", gens(g)),
        Recipe::DeltaStar(g) => format!("d*({})", gens(g)),
        Recipe::Compose(a, b) => {
            let left = match **a {
                Recipe::Compose(..) => format!("({})", print_expansion(a)),
                _ => print_expansion(a),
            };
            format!("{left} o {}", print_expansion(b))
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rings() {
        assert_eq!(
            parse_ring("Z4[x]/(x^3)").unwrap(),
            RingSpec::PolyQuotient {
                base: 4,
                modulus: vec![0, 0, 0, 1]
            }
        );
        assert_eq!(parse_ring("Z4[x]/([0,0,0,1])").unwrap(), parse_ring("Z4[x]/(x^3)").unwrap());
        assert_eq!(
            parse_ring("Z4 x Z9").unwrap(),
            RingSpec::Product(Box::new(RingSpec::Modular(4)), Box::new(RingSpec::Modular(9)))
        );
        assert_eq!(parse_ring(" ZZ ").unwrap(), RingSpec::Integers);
        let r = parse_ring("Z8 (+) quot(Z8, (4))").unwrap();
        assert_eq!(r.to_string(), "Z8 (+) quot(Z8, (4))");
        let l = parse_ring("loc(Z12, {1,4})").unwrap();
        assert_eq!(l.to_string(), "loc(Z12, {1,4})");
    }

    #[test]
    fn associativity() {
        let r = parse_ring("Z2 x Z2 x Z3").unwrap();
        assert_eq!(r.to_string(), "(Z2 x Z2) x Z3");
        let r = parse_ring("Z2 (+) Z2 x Z3").unwrap();
        assert_eq!(r.to_string(), "(Z2 (+) Z2) x Z3");
        let r = parse_ring("Z2 x (Z2 (+) Z2)").unwrap();
        assert_eq!(parse_ring(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn syntax_errors() {
        let e = parse_ring("Z6 )").unwrap_err();
        assert_eq!((e.offset, e.line, e.column), (3, 1, 4));
        assert!(e.expected.contains(&"end of input".to_string()));
        let e = parse_ring("Z1").unwrap_err();
        assert!(e.message.is_some());
        let e = parse_ring("Z4 (+) Z9").unwrap_err();
        assert!(e.message.unwrap().contains("module"));
        assert!(parse_ring("quot(Z6, 2)").is_err());
    }

    #[test]
    fn elements() {
        assert_eq!(parse_element("1+3x+x^2").unwrap(), ElemExpr::poly([1, 3, 1]));
        assert_eq!(parse_element("x^2 + x + 1").unwrap(), ElemExpr::poly([1, 1, 1]));
        assert_eq!(parse_element("-2").unwrap(), ElemExpr::int(-2));
        assert_eq!(
            parse_element("(1,0)").unwrap(),
            ElemExpr::pair(ElemExpr::int(1), ElemExpr::int(0))
        );
        assert_eq!(parse_element("3/4").unwrap(), ElemExpr::frac(ElemExpr::int(3), ElemExpr::int(4)));
        assert_eq!(parse_element("(1+x)").unwrap(), ElemExpr::poly([1, 1]));
        assert_eq!(parse_ideal("(2, x)").unwrap().len(), 2);
    }

    #[test]
    fn expansions() {
        assert_eq!(parse_expansion("d0").unwrap(), Recipe::Delta0);
        let e = parse_expansion("d1 o d+((3))").unwrap();
        assert_eq!(e.to_string(), "compose(delta1, delta_plus(gens=[3]))");
        assert_eq!(parse_expansion(&e.to_string()).unwrap(), e);
        assert_eq!(parse_expansion(&print_expansion(&e)).unwrap(), e);
        let q = parse_expansion("quotient(delta1)").unwrap();
        assert_eq!(q, Recipe::Quotient(Box::new(Recipe::Delta1)));
        assert!(parse_expansion("d2").is_err());
        let two = parse_expansion("d+((2,x))").unwrap();
        assert_eq!(two, Recipe::DeltaPlus(vec![ElemExpr::int(2), ElemExpr::poly([0, 1])]));
        assert_eq!(parse_expansion(&print_expansion(&two)).unwrap(), two);
        assert_eq!(parse_expansion("d+(3)").unwrap(), parse_expansion("d+((3))").unwrap());
        let pair = parse_expansion("d*(((1,0)))").unwrap();
        assert!(matches!(&pair, Recipe::DeltaStar(g) if g.len() == 1));
        assert_eq!(parse_expansion(&print_expansion(&pair)).unwrap(), pair);
    }

    #[test]
    fn spec_lines() {
        let s = parse_spec("Z6 ; d0 ; d*((2))").unwrap();
        assert_eq!(s.ring, RingSpec::Modular(6));
        assert_eq!(s.expansions.len(), 2);
    }
}
