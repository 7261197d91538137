use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, ParseErrorKind, RPoly};
use crate::gf2e::F16;
use crate::poly::FactorSet;
use crate::rring::RElem;

struct Parser<'a> {
    toks: Vec<Token>,
    at: usize,
    end: usize,
    factors: &'a FactorSet,
    k: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|t| t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { pos: self.pos(), kind }
    }

    fn n(&self) -> usize {
        self.factors.n
    }

    fn expr(&mut self) -> Result<RPoly, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some(Tok::Plus) {
            self.at += 1;
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RPoly, ParseError> {
        let mut acc = self.power()?;
        while matches!(self.peek(), Some(Tok::Star | Tok::Juxt)) {
            self.at += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<u64>, ParseError> {
        if self.peek() != Some(Tok::Caret) {
            return Ok(None);
        }
        self.at += 1;
        match self.peek() {
            Some(Tok::Int(e)) => {
                self.at += 1;
                Ok(Some(e))
            }
            _ => Err(self.err(ParseErrorKind::BadExponent)),
        }
    }

    fn power(&mut self) -> Result<RPoly, ParseError> {
        let (n, k) = (self.n(), self.k);
        let start = self.pos();
        let tok = self.peek().ok_or_else(|| self.err(ParseErrorKind::UnexpectedEnd))?;
        self.at += 1;
        let base = match tok {
            Tok::Sym(s) => {
                let e = self.exponent()?.unwrap_or(1);
                return Ok(match s {
                    'w' => RPoly::constant(n, RElem::scalar(k, F16::pow_w(e))),
                    'u' => RPoly::constant(n, RElem::monomial(k, e.min(u64::from(u8::MAX)) as usize, 0, F16::ONE)),
                    'v' => RPoly::constant(n, RElem::monomial(k, 0, e.min(4) as usize, F16::ONE)),
                    _ => RPoly::x_pow(n, k, (e % n as u64) as usize),
                });
            }
            Tok::Int(v) => RPoly::constant(n, RElem::scalar(k, if v % 2 == 1 { F16::ONE } else { F16::ZERO })),
            Tok::Factor(i) => {
                let f = self.factors.get(i).ok_or(ParseError { pos: start, kind: ParseErrorKind::MissingFactor(i) })?;
                RPoly::from_f16poly(n, k, f)
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return Err(self.err(ParseErrorKind::Expected(')')));
                }
                self.at += 1;
                inner
            }
            other => {
                self.at -= 1;
                return Err(self.err(ParseErrorKind::UnexpectedToken(other.to_string())));
            }
        };
        Ok(match self.exponent()? {
            Some(e) => base.pow(e as u32),
            None => base,
        })
    }
}

/// Evaluates a generator expression in `R[x]/(x^n - 1)` with `n = factors.n`.
pub fn parse(text: &str, factors: &FactorSet, k: usize) -> Result<RPoly, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.len(), factors, k };
    if p.peek().is_none() {
        return Err(p.err(ParseErrorKind::UnexpectedEnd));
    }
    let out = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(p.err(ParseErrorKind::UnexpectedToken(t.to_string())));
    }
    Ok(out)
}
