//! Expression parsers for the CLI surface: formal multiplicative elements
//! (`zeta3^2*q^-1`), cyclotomic values (`2/3*zeta5`), and algebra elements
//! (`3*x1^2*x2^-1 + (1/2)*x3`). Products of algebra generators are evaluated
//! with the actual quantum multiplication, so input order matters exactly as
//! it does in the algebra.

use hopfcheck_core::exactnum::{zeta, CycField, Cyclotomic};
use hopfcheck_core::field::Field;
use hopfcheck_core::qalg::{QAlgebra, QElement, Variant};
use hopfcheck_core::{Error, MultElement, Rational, Result};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Caret,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let num: String = chars[i..j].iter().collect();
                let mut den = String::from("1");
                if j < chars.len() && chars[j] == '/' {
                    let mut k = j + 1;
                    while k < chars.len() && chars[k].is_ascii_digit() {
                        k += 1;
                    }
                    if k == j + 1 {
                        return Err(Error::Parse(format!("bad rational near `{num}/`")));
                    }
                    den = chars[j + 1..k].iter().collect();
                    j = k;
                }
                let n: num_bigint::BigInt = num.parse().unwrap();
                let d: num_bigint::BigInt = den.parse().unwrap();
                if d == 0.into() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                out.push(Tok::Num(Rational::new(n, d)));
                i = j;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                out.push(Tok::Ident(chars[i..j].iter().collect()));
                i = j;
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Cursor {
    toks: Vec<Tok>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let neg = self.eat(&Tok::Minus);
        match self.next() {
            Some(Tok::Num(r)) if r.is_integer() => {
                let v = i64::try_from(r.numer())
                    .map_err(|_| Error::Parse("exponent too large".into()))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(Error::Parse("expected integer exponent after `^`".into())),
        }
    }

    fn done(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "trailing input at token {}",
                self.pos + 1
            )))
        }
    }
}

/// `zeta<N>` identifiers denote the primitive root of unity of that order.
fn zeta_order(name: &str) -> Option<u64> {
    let rest = name.strip_prefix("zeta")?;
    if rest.is_empty() {
        return None;
    }
    rest.parse().ok()
}

/// Collect the free-generator names mentioned in a set of formal-element
/// expressions, sorted for a reproducible basis order.
pub fn collect_free_names(exprs: &[&str]) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for e in exprs {
        for t in tokenize(e)? {
            if let Tok::Ident(name) = t {
                if zeta_order(&name).is_none() && !names.contains(&name) {
                    names.push(name);
                }
            }
        }
    }
    names.sort();
    Ok(names)
}

/// Parse a formal multiplicative element over the declared free basis:
/// products of `zeta<N>^k`, free generator powers, and the literals `1`,
/// `-1`.
pub fn parse_mult_element(s: &str, free_names: &[String]) -> Result<MultElement> {
    let mut cur = Cursor {
        toks: tokenize(s)?,
        pos: 0,
    };
    let nfree = free_names.len();
    let mut acc = MultElement::one(nfree);
    if cur.eat(&Tok::Minus) {
        acc = acc.mul(&MultElement::root_of_unity(2, 1, nfree));
    }
    loop {
        let factor = match cur.next() {
            Some(Tok::Num(r)) => {
                let one = Rational::from_integer(1.into());
                if r == one {
                    MultElement::one(nfree)
                } else {
                    return Err(Error::Parse(format!(
                        "`{r}` is not a formal unit; declare a generator and instantiate it in [values]"
                    )));
                }
            }
            Some(Tok::Ident(name)) => match zeta_order(&name) {
                Some(n) => MultElement::root_of_unity(n, 1, nfree),
                None => {
                    let idx = free_names
                        .iter()
                        .position(|f| *f == name)
                        .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))?;
                    MultElement::free_generator(idx, nfree)
                }
            },
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        let e = cur.exponent()?;
        acc = acc.mul(&factor.pow(e));
        if !cur.eat(&Tok::Star) {
            break;
        }
    }
    cur.done()?;
    Ok(acc)
}

/// Parse a concrete cyclotomic value: a product of a rational and powers of
/// `zeta<N>`, e.g. `2`, `-1/3`, `2*zeta5^3`.
pub fn parse_cyclotomic(s: &str) -> Result<Cyclotomic> {
    let f = CycField;
    let mut cur = Cursor {
        toks: tokenize(s)?,
        pos: 0,
    };
    let mut acc = Cyclotomic::one();
    if cur.eat(&Tok::Minus) {
        acc = f.neg(&acc);
    }
    loop {
        let factor = match cur.next() {
            Some(Tok::Num(r)) => Cyclotomic::from_rational(r),
            Some(Tok::Ident(name)) => match zeta_order(&name) {
                Some(n) => zeta(n, 1),
                None => {
                    return Err(Error::Parse(format!(
                        "`{name}` is not a concrete value; values may use rationals and zeta<N>"
                    )))
                }
            },
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        let e = cur.exponent()?;
        let powered = f
            .pow_i64(&factor, e)
            .ok_or_else(|| Error::Parse("inverse of zero".into()))?;
        acc = f.mul(&acc, &powered);
        if !cur.eat(&Tok::Star) {
            break;
        }
    }
    cur.done()?;
    Ok(acc)
}

/// Parse an algebra element in the textual syntax
/// `3*x1^2*x2^-1 + (1/2)*x3`. Generator products are evaluated with the
/// quantum multiplication; inverse powers require the torus variant.
pub fn parse_algebra_element(
    s: &str,
    algebra: &Arc<QAlgebra<CycField>>,
    free_names: &[String],
) -> Result<QElement<CycField>> {
    let mut cur = Cursor {
        toks: tokenize(s)?,
        pos: 0,
    };
    let mut acc = QElement::zero(algebra);
    let mut negate = cur.eat(&Tok::Minus);
    loop {
        let term = parse_term(&mut cur, algebra, free_names)?;
        acc = acc.add(&if negate { term.neg() } else { term })?;
        match cur.next() {
            None => break,
            Some(Tok::Plus) => negate = false,
            Some(Tok::Minus) => negate = true,
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
    Ok(acc)
}

fn parse_term(
    cur: &mut Cursor,
    algebra: &Arc<QAlgebra<CycField>>,
    free_names: &[String],
) -> Result<QElement<CycField>> {
    let _f = CycField;
    let ring = algebra.scalars();
    let mut acc = QElement::one(algebra);
    loop {
        let base: QElement<CycField> = match cur.next() {
            Some(Tok::Num(r)) => {
                QElement::one(algebra).scale(&ring.constant(Cyclotomic::from_rational(r)))
            }
            Some(Tok::LParen) => {
                // parenthesized scalar: rational or -rational
                let neg = cur.eat(&Tok::Minus);
                let r = match cur.next() {
                    Some(Tok::Num(r)) => r,
                    other => {
                        return Err(Error::Parse(format!(
                            "expected rational inside parentheses, got {other:?}"
                        )))
                    }
                };
                if !cur.eat(&Tok::RParen) {
                    return Err(Error::Parse("expected `)`".into()));
                }
                let r = if neg { -r } else { r };
                QElement::one(algebra).scale(&ring.constant(Cyclotomic::from_rational(r)))
            }
            Some(Tok::Ident(name)) => {
                if let Some(n) = zeta_order(&name) {
                    QElement::one(algebra).scale(&ring.constant(zeta(n, 1)))
                } else if let Some(rest) = name.strip_prefix('x') {
                    if let Ok(j) = rest.parse::<usize>() {
                        if j == 0 || j > algebra.rank() {
                            return Err(Error::Parse(format!(
                                "generator x{j} out of range 1..={}",
                                algebra.rank()
                            )));
                        }
                        QElement::generator(algebra, j - 1)
                    } else {
                        free_coefficient(algebra, free_names, &name)?
                    }
                } else {
                    free_coefficient(algebra, free_names, &name)?
                }
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        let e = cur.exponent()?;
        let powered = element_power(algebra, &base, e)?;
        acc = acc.mul(&powered)?;
        if !cur.eat(&Tok::Star) {
            break;
        }
    }
    Ok(acc)
}

fn free_coefficient(
    algebra: &Arc<QAlgebra<CycField>>,
    free_names: &[String],
    name: &str,
) -> Result<QElement<CycField>> {
    let idx = free_names
        .iter()
        .position(|f| f == name)
        .ok_or_else(|| Error::Parse(format!("unknown symbol `{name}`")))?;
    let mut exps = vec![0i64; free_names.len()];
    exps[idx] = 1;
    Ok(QElement::one(algebra).scale(&algebra.scalars().monomial(exps, Cyclotomic::one())))
}

fn element_power(
    algebra: &Arc<QAlgebra<CycField>>,
    base: &QElement<CycField>,
    e: i64,
) -> Result<QElement<CycField>> {
    if e >= 0 {
        return base.pow(e as u32);
    }
    // negative powers: single monomials with unit coefficient only
    let ring = algebra.scalars();
    let terms = base.terms();
    if terms.len() != 1 {
        return Err(Error::Parse("cannot invert a sum".into()));
    }
    let (exps, coeff) = terms.iter().next().unwrap();
    let inv_coeff = ring
        .inv_unit(coeff)
        .ok_or_else(|| Error::Parse("cannot invert this coefficient".into()))?;
    if exps.iter().any(|&x| x != 0) && algebra.variant() != Variant::Torus {
        return Err(Error::Parse(
            "negative generator powers need the torus variant".into(),
        ));
    }
    let inv = QElement::monomial(
        algebra,
        exps.iter().map(|x| -x).collect(),
        inv_coeff,
    );
    // account for the reordering scalar: (c x^u)^(-1) = c^(-1) s^(-1) x^(-u)
    let check = base.mul(&inv)?;
    let (zero_exps, s) = check.terms().iter().next().unwrap();
    debug_assert!(zero_exps.iter().all(|&x| x == 0));
    let fix = ring
        .inv_unit(s)
        .ok_or_else(|| Error::Parse("cannot invert this monomial".into()))?;
    let inv = inv.scale(&fix);
    element_power(algebra, &inv, -e)
}
