use super::{ParseError, ParseErrorKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tok {
    /// One of `w`, `u`, `v`, `x`.
    Sym(char),
    /// `f_i` or `fi`.
    Factor(usize),
    Int(u64),
    Caret,
    Star,
    Plus,
    LParen,
    RParen,
    /// Inserted between adjacent atoms.
    Juxt,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Factor(i) => write!(f, "f_{i}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Juxt => f.write_str("juxtaposition"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: usize,
}

fn ends_atom(t: Tok) -> bool {
    matches!(t, Tok::Sym(_) | Tok::Factor(_) | Tok::Int(_) | Tok::RParen)
}

fn starts_atom(t: Tok) -> bool {
    matches!(t, Tok::Sym(_) | Tok::Factor(_) | Tok::Int(_) | Tok::LParen)
}

fn read_int(chars: &[(usize, char)], i: &mut usize) -> Option<u64> {
    let start = *i;
    while *i < chars.len() && chars[*i].1.is_ascii_digit() {
        *i += 1;
    }
    let s: String = chars[start..*i].iter().map(|c| c.1).collect();
    s.parse().ok()
}

/// Splits an expression into tokens. Braces are dropped, whitespace is
/// ignored, and a [`Tok::Juxt`] marks each implicit product.
pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<(usize, char)> =
        text.char_indices().filter(|(_, c)| !c.is_whitespace() && *c != '{' && *c != '}').collect();
    let mut out: Vec<Token> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let tok = match c {
            'w' | 'u' | 'v' | 'x' => {
                i += 1;
                Tok::Sym(c)
            }
            'f' => {
                i += 1;
                if i < chars.len() && chars[i].1 == '_' {
                    i += 1;
                }
                let idx = read_int(&chars, &mut i).ok_or(ParseError { pos, kind: ParseErrorKind::BadFactorRef })?;
                Tok::Factor(idx as usize)
            }
            '0'..='9' => {
                let v = read_int(&chars, &mut i).ok_or(ParseError { pos, kind: ParseErrorKind::BadInteger })?;
                Tok::Int(v)
            }
            '^' | '*' | '+' | '(' | ')' => {
                i += 1;
                match c {
                    '^' => Tok::Caret,
                    '*' => Tok::Star,
                    '+' => Tok::Plus,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                }
            }
            other => return Err(ParseError { pos, kind: ParseErrorKind::UnexpectedChar(other) }),
        };
        if let Some(prev) = out.last() {
            if ends_atom(prev.tok) && starts_atom(tok) && prev.tok != Tok::Caret {
                out.push(Token { tok: Tok::Juxt, pos });
            }
        }
        out.push(Token { tok, pos });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn examples() {
        use Tok::*;
        assert_eq!(toks("w^13"), [Sym('w'), Caret, Int(13)]);
        assert_eq!(toks("w^{13}"), [Sym('w'), Caret, Int(13)]);
        assert_eq!(
            toks("u^3v^2w^3"),
            [Sym('u'), Caret, Int(3), Juxt, Sym('v'), Caret, Int(2), Juxt, Sym('w'), Caret, Int(3)]
        );
        assert_eq!(toks("(w)f_2 + wf1"), [LParen, Sym('w'), RParen, Juxt, Factor(2), Plus, Sym('w'), Juxt, Factor(1)]);
    }

    #[test]
    fn errors_carry_positions() {
        let e = tokenize("w + y").unwrap_err();
        assert_eq!(e.pos, 4);
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar('y'));
        assert_eq!(tokenize("f_").unwrap_err().kind, ParseErrorKind::BadFactorRef);
    }
}
