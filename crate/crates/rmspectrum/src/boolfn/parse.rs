//! Text syntax for ANF expressions.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := '0' | '1' | factor ('*' factor)*
//! factor := 'x' integer        (1-based, within the ambient count)
//! ```
//!
//! Whitespace is ignored. The `*` is mandatory: `x1x2` is rejected, which
//! keeps multi-digit indices unambiguous.

use crate::boolfn::Anf;
use crate::error::{Error, Result};

struct Lexer {
    // (char, 1-based position in the original text)
    chars: Vec<(char, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Self {
        let chars = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (c, i + 1))
            .collect();
        Lexer { chars, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(c, _)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    /// Position (1-based) of the current char, or one past the end.
    fn here(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or_else(|| self.chars.last().map(|&(_, p)| p + 1).unwrap_or(1))
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.here();
        let mut digits = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(Error::Syntax {
                position: start,
                message: "expected a variable index after 'x'".into(),
            });
        }
        digits.parse().map_err(|_| Error::Syntax {
            position: start,
            message: format!("variable index {digits} too large"),
        })
    }
}

/// Parses an ANF expression over `n` variables into its canonical form
/// (duplicate terms cancel pairwise, XOR semantics).
pub fn parse_anf(text: &str, n: usize) -> Result<Anf> {
    let mut lex = Lexer::new(text);
    let mut anf = Anf::zero(n);
    if lex.peek().is_none() {
        return Err(Error::Syntax { position: 1, message: "empty expression".into() });
    }
    loop {
        parse_term(&mut lex, n, &mut anf)?;
        match lex.peek() {
            None => break,
            Some('+') => {
                lex.bump();
            }
            Some(c) => {
                return Err(Error::Syntax {
                    position: lex.here(),
                    message: format!("expected '+' or end of input, found {c:?}"),
                });
            }
        }
    }
    Ok(anf)
}

fn parse_term(lex: &mut Lexer, n: usize, anf: &mut Anf) -> Result<()> {
    match lex.peek() {
        Some('0') => {
            lex.bump();
            Ok(())
        }
        Some('1') => {
            lex.bump();
            anf.toggle_mask(0);
            Ok(())
        }
        Some('x') => {
            let mut mask = 0u32;
            loop {
                let pos = lex.here();
                match lex.bump() {
                    Some('x') => {}
                    Some(c) => {
                        return Err(Error::Syntax {
                            position: pos,
                            message: format!("expected a variable, found {c:?}"),
                        });
                    }
                    None => {
                        return Err(Error::Syntax {
                            position: pos,
                            message: "expected a variable".into(),
                        });
                    }
                }
                let index = lex.integer()?;
                if index == 0 || index > n {
                    return Err(Error::VarOutOfRange { index, n });
                }
                mask |= 1 << (index - 1);
                if lex.peek() == Some('*') {
                    lex.bump();
                } else {
                    break;
                }
            }
            anf.toggle_mask(mask);
            Ok(())
        }
        other => Err(Error::Syntax {
            position: lex.here(),
            message: match other {
                Some(c) => format!("expected '0', '1' or a variable, found {c:?}"),
                None => "expected a term".into(),
            },
        }),
    }
}
