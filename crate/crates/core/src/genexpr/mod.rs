//! The generator-expression language: sums of products of `w^e`, `u^e`,
//! `v^e`, `x^e`, factor references `f_i`, integers and parenthesised
//! subexpressions. Juxtaposition multiplies, in written order.

mod lexer;
mod parser;
mod rpoly;

pub use lexer::{tokenize, Tok, Token};
pub use parser::parse;
pub use rpoly::RPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    BadFactorRef,
    BadInteger,
    BadExponent,
    Expected(char),
    MissingFactor(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at column {pos}: {}", describe(.kind))]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

fn describe(k: &ParseErrorKind) -> String {
    match k {
        ParseErrorKind::UnexpectedChar(c) => format!("unexpected character {c:?}"),
        ParseErrorKind::UnexpectedToken(t) => format!("unexpected token {t}"),
        ParseErrorKind::UnexpectedEnd => "unexpected end of input".into(),
        ParseErrorKind::BadFactorRef => "malformed factor reference, expected f_<index>".into(),
        ParseErrorKind::BadInteger => "integer out of range".into(),
        ParseErrorKind::BadExponent => "expected an integer exponent after '^'".into(),
        ParseErrorKind::Expected(c) => format!("expected {c:?}"),
        ParseErrorKind::MissingFactor(i) => format!("no factor f_{i} in the factor table"),
    }
}

/// Prints an [`RPoly`] so that [`parse`] reads it back.
pub fn format(p: &RPoly) -> String {
    let mut terms = Vec::new();
    for (t, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cs = c.to_string();
        let xs = match t {
            0 => {
                terms.push(cs);
                continue;
            }
            1 => "x".to_string(),
            _ => format!("x^{t}"),
        };
        terms.push(if cs == "1" {
            xs
        } else if cs.contains(" + ") {
            format!("({cs})*{xs}")
        } else {
            format!("{cs}*{xs}")
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2e::F16;
    use crate::poly::factor_xn_minus_1;
    use crate::rring::RElem;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(t: u64) -> F16 {
        F16::pow_w(t)
    }

    #[test]
    fn parse_examples() {
        let fs = factor_xn_minus_1(5).unwrap();
        let p = parse("w*f_1", &fs, 1).unwrap();
        let s = |c| RElem::scalar(1, c);
        assert_eq!(p.coeffs(), [s(w(1)), s(w(1)), s(F16::ZERO), s(F16::ZERO), s(F16::ZERO)]);
        assert_eq!(parse("1", &fs, 2).unwrap(), RPoly::one(5, 2));
        assert_eq!(parse("wf1", &fs, 1).unwrap(), p);
    }

    #[test]
    fn example_generator_by_hand() {
        let fs = factor_xn_minus_1(5).unwrap();
        let g = parse("(w^3v^3 + w^5v^2 + w^4v + w^{13} +w )f_2 + wf_1", &fs, 1).unwrap();
        let k = 1;
        let sc = |t| RElem::scalar(k, w(t));
        let vp = |j| RElem::monomial(k, 0, j, F16::ONE);
        let head = sc(3) * vp(3) + sc(5) * vp(2) + sc(4) * vp(1) + sc(13) + sc(1);
        let f2 = RPoly::from_f16poly(5, k, &fs.factors[1]);
        let f1 = RPoly::from_f16poly(5, k, &fs.factors[0]);
        let expect = RPoly::constant(5, head).mul(&f2).add(&RPoly::constant(5, sc(1)).mul(&f1));
        assert_eq!(g, expect);
    }

    #[test]
    fn precedence() {
        let fs = factor_xn_minus_1(3).unwrap();
        let a = parse("w^2v + u", &fs, 2).unwrap();
        let b = parse("(w^2)*(v) + (u)", &fs, 2).unwrap();
        assert_eq!(a, b);
        let c = parse("w^2*v^2", &fs, 2).unwrap();
        let d = parse("(w^2)(v^2)", &fs, 2).unwrap();
        assert_eq!(c, d);
        assert_ne!(parse("(w v)^2", &fs, 2).unwrap(), parse("w v^2", &fs, 2).unwrap());
    }

    #[test]
    fn nilpotent_exponents_vanish() {
        let fs = factor_xn_minus_1(3).unwrap();
        assert!(parse("u^2", &fs, 2).unwrap().is_zero());
        assert!(parse("v^4 + u^9", &fs, 3).unwrap().is_zero());
        assert_eq!(parse("w^15", &fs, 1).unwrap(), RPoly::one(3, 1));
    }

    #[test]
    fn errors() {
        let fs = factor_xn_minus_1(3).unwrap();
        assert_eq!(parse("w f_4", &fs, 1).unwrap_err(), ParseError { pos: 2, kind: ParseErrorKind::MissingFactor(4) });
        assert_eq!(parse("(w", &fs, 1).unwrap_err().kind, ParseErrorKind::Expected(')'));
        assert_eq!(parse("w^", &fs, 1).unwrap_err().kind, ParseErrorKind::BadExponent);
        assert_eq!(parse("", &fs, 1).unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
        assert!(matches!(parse("w + + v", &fs, 1).unwrap_err().kind, ParseErrorKind::UnexpectedToken(_)));
        assert!(parse("w )", &fs, 1).is_err());
    }

    #[test]
    fn format_examples() {
        assert_eq!(format(&RPoly::zero(3, 1)), "0");
        assert_eq!(format(&RPoly::one(3, 1)), "1");
        let fs = factor_xn_minus_1(5).unwrap();
        let g = parse("(w^3v^3 + w^5v^2 + w^4v + w^{13} +w )f_2 + wf_1", &fs, 1).unwrap();
        assert_eq!(parse(&format(&g), &fs, 1).unwrap(), g);
    }

    #[test]
    fn format_roundtrip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (n, k) in [(1, 1), (3, 2), (5, 3), (7, 4)] {
            let fs = factor_xn_minus_1(n).unwrap();
            for _ in 0..20 {
                let p = RPoly::random(n, k, &mut rng);
                assert_eq!(parse(&format(&p), &fs, k).unwrap(), p);
            }
        }
    }
}
