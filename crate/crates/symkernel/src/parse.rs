//! Recursive-descent parser for the expression grammar.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := base ("^" integer)?
//! base   := rational | identifier | identifier "(" identifier ")"
//!         | "(" expr ")" | "-" factor
//! identifier := [A-Za-z_][A-Za-z0-9_]* "'"*
//! ```
//!
//! Whitespace is insignificant. Primes after an identifier denote the
//! derivative order of an opaque function symbol (`f`, `f'`, `f''`), and a
//! function symbol must be applied to its declared argument coordinate, as
//! in `f''(p)`. The name `sqrt2` is the built-in quadratic constant.
//! Rational literals are integer literals combined with `-` and `/`, so
//! `-3/2` is exact. Division is exact field division and rejects
//! identically-zero divisors at parse time.

use crate::error::{ParseError, ParseErrorKind};
use crate::expr::Expr;
use crate::symbol::{Context, SQRT2_NAME};
use num_bigint::BigInt;
use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident { name: String, primes: u32 },
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        loop {
            lx.skip_ws();
            if lx.pos >= lx.src.len() {
                break;
            }
            let start = lx.pos;
            let c = lx.src[lx.pos] as char;
            let tok = match c {
                '+' => {
                    lx.pos += 1;
                    Tok::Plus
                }
                '-' => {
                    lx.pos += 1;
                    Tok::Minus
                }
                '*' => {
                    lx.pos += 1;
                    Tok::Star
                }
                '/' => {
                    lx.pos += 1;
                    Tok::Slash
                }
                '^' => {
                    lx.pos += 1;
                    Tok::Caret
                }
                '(' => {
                    lx.pos += 1;
                    Tok::LParen
                }
                ')' => {
                    lx.pos += 1;
                    Tok::RParen
                }
                '0'..='9' => {
                    let s = lx.take_while(|c| c.is_ascii_digit());
                    Tok::Num(s.parse::<BigInt>().expect("digit run parses as integer"))
                }
                'A'..='Z' | 'a'..='z' | '_' => {
                    let name = lx.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                    let mut primes = 0u32;
                    while lx.pos < lx.src.len() && lx.src[lx.pos] == b'\'' {
                        primes += 1;
                        lx.pos += 1;
                    }
                    Tok::Ident { name, primes }
                }
                other => {
                    return Err(ParseError {
                        offset: start,
                        kind: ParseErrorKind::UnexpectedChar(other),
                    })
                }
            };
            out.push((tok, start));
        }
        Ok(out)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && pred(self.src[self.pos] as char) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }
}

struct Parser<'a> {
    ctx: &'a Context,
    toks: Vec<(Tok, usize)>,
    idx: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.idx)
            .map(|(_, o)| *o)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind,
        }
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t == want => {
                self.idx += 1;
                Ok(())
            }
            Some(t) => Err(self.err(ParseErrorKind::Unexpected {
                expected: what.to_string(),
                found: describe(t),
            })),
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.idx += 1;
                    acc = acc * self.factor()?;
                }
                Some(Tok::Slash) => {
                    let at = self.offset();
                    self.idx += 1;
                    let rhs = self.factor()?;
                    acc = acc.try_div(&rhs).map_err(|_| ParseError {
                        offset: at,
                        kind: ParseErrorKind::DivisionByZero,
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.idx += 1;
            let neg = if matches!(self.peek(), Some(Tok::Minus)) {
                self.idx += 1;
                true
            } else {
                false
            };
            let at = self.offset();
            let n = match self.bump() {
                Some(Tok::Num(n)) => n,
                Some(t) => {
                    return Err(ParseError {
                        offset: at,
                        kind: ParseErrorKind::Unexpected {
                            expected: "integer exponent".to_string(),
                            found: describe(&t),
                        },
                    })
                }
                None => {
                    return Err(ParseError {
                        offset: at,
                        kind: ParseErrorKind::UnexpectedEnd,
                    })
                }
            };
            let mut e: i32 = i32::try_from(&n).map_err(|_| ParseError {
                offset: at,
                kind: ParseErrorKind::ExponentRange,
            })?;
            if neg {
                e = -e;
            }
            return base.powi(e).map_err(|_| ParseError {
                offset: at,
                kind: ParseErrorKind::DivisionByZero,
            });
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Expr::constant(crate::coeff::Coeff::from_rational(
                BigRational::from_integer(n),
            ))),
            Some(Tok::Minus) => Ok(-self.factor()?),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::Ident { name, primes }) => self.ident(at, name, primes),
            Some(t) => Err(ParseError {
                offset: at,
                kind: ParseErrorKind::Unexpected {
                    expected: "a number, identifier, `(`, or `-`".to_string(),
                    found: describe(&t),
                },
            }),
            None => Err(ParseError {
                offset: at,
                kind: ParseErrorKind::UnexpectedEnd,
            }),
        }
    }

    fn ident(&mut self, at: usize, name: String, primes: u32) -> Result<Expr, ParseError> {
        if name == SQRT2_NAME {
            if primes > 0 {
                return Err(ParseError {
                    offset: at,
                    kind: ParseErrorKind::PrimeOnNonFunction(name),
                });
            }
            return Ok(Expr::sqrt2());
        }
        let sym = self
            .ctx
            .get(&name)
            .ok_or_else(|| ParseError {
                offset: at,
                kind: ParseErrorKind::Undeclared(name.clone()),
            })?
            .clone();
        if sym.is_opaque() {
            // Function symbols require an applied argument: f''(p).
            self.expect(&Tok::LParen, "`(`").map_err(|_| ParseError {
                offset: at,
                kind: ParseErrorKind::MissingArgument(name.clone()),
            })?;
            let arg_at = self.offset();
            let arg_name = match self.bump() {
                Some(Tok::Ident {
                    name: a,
                    primes: 0,
                }) => a,
                Some(t) => {
                    return Err(ParseError {
                        offset: arg_at,
                        kind: ParseErrorKind::Unexpected {
                            expected: "argument coordinate".to_string(),
                            found: describe(&t),
                        },
                    })
                }
                None => {
                    return Err(ParseError {
                        offset: arg_at,
                        kind: ParseErrorKind::UnexpectedEnd,
                    })
                }
            };
            let expected = sym.opaque_arg_name().expect("opaque symbol has argument");
            if arg_name != expected {
                return Err(ParseError {
                    offset: arg_at,
                    kind: ParseErrorKind::WrongArgument {
                        function: name,
                        expected: expected.to_string(),
                        found: arg_name,
                    },
                });
            }
            self.expect(&Tok::RParen, "`)`")?;
            let mut s = sym;
            for _ in 0..primes {
                s = s.opaque_derivative();
            }
            Ok(Expr::var(&s))
        } else {
            if primes > 0 {
                return Err(ParseError {
                    offset: at,
                    kind: ParseErrorKind::PrimeOnNonFunction(name),
                });
            }
            if matches!(self.peek(), Some(Tok::LParen)) {
                return Err(ParseError {
                    offset: self.offset(),
                    kind: ParseErrorKind::NotAFunction(name),
                });
            }
            Ok(Expr::var(&sym))
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => n.to_string(),
        Tok::Ident { name, primes } => {
            let mut s = name.clone();
            for _ in 0..*primes {
                s.push('\'');
            }
            s
        }
        Tok::Plus => "+".to_string(),
        Tok::Minus => "-".to_string(),
        Tok::Star => "*".to_string(),
        Tok::Slash => "/".to_string(),
        Tok::Caret => "^".to_string(),
        Tok::LParen => "(".to_string(),
        Tok::RParen => ")".to_string(),
    }
}

impl Context {
    /// Parse an expression against this workspace's declarations.
    pub fn parse(&self, src: &str) -> Result<Expr, ParseError> {
        let toks = Lexer::tokens(src)?;
        let mut p = Parser {
            ctx: self,
            toks,
            idx: 0,
            end: src.len(),
        };
        let e = p.expr()?;
        if let Some(t) = p.peek() {
            return Err(ParseError {
                offset: p.offset(),
                kind: ParseErrorKind::Unexpected {
                    expected: "end of input".to_string(),
                    found: describe(t),
                },
            });
        }
        Ok(e)
    }
}
