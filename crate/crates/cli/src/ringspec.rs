//! The ring-spec expression language.
//!
//! ```text
//! ring := "Z" INT | ring "x" ring | ring "/" "(" INT{","INT} ")" | ring "(+)" ("self" | "Z" INT)
//! ```
//!
//! Products are left-associative; quotient and idealization suffixes bind
//! tighter than products. Quotient integers are element indices of the
//! ring they apply to.

use std::fmt;

use srlab_core::ring::{
    direct_product, idealization, make_zn, quotient_ring, FiniteRing, ModuleSpec,
};
use srlab_core::{Elem, Error};

/// Parse tree: a product of suffixed atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpecAst {
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    /// The `Z n` atom.
    pub modulus: u32,
    pub suffixes: Vec<Suffix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Suffix {
    /// `/(g1,...,gk)` — quotient by the ideal those element indices generate.
    Quotient(Vec<u32>),
    /// `(+)self`
    IdealizeSelf,
    /// `(+)Zm`
    IdealizeZ(u32),
}

impl fmt::Display for RingSpecAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}", self.modulus)?;
        for s in &self.suffixes {
            match s {
                Suffix::Quotient(gens) => {
                    let list: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                    write!(f, "/({})", list.join(","))?;
                }
                Suffix::IdealizeSelf => write!(f, "(+)self")?,
                Suffix::IdealizeZ(m) => write!(f, "(+)Z{m}")?,
            }
        }
        Ok(())
    }
}

/// Grammar-faithful rendering; `parse(render(ast)) == ast`.
pub fn render(ast: &RingSpecAst) -> String {
    ast.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", byte as char))
        }
    }

    fn int(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError {
                pos: start,
                message: "integer too large".into(),
            })
    }

    fn atom(&mut self) -> Result<u32, ParseError> {
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                self.int()
            }
            _ => self.err("expected 'Z<n>'"),
        }
    }

    /// `(+)` needs lookahead past the '(' shared with nothing else here.
    fn try_idealize(&mut self) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(b"(+)") {
            self.pos += 3;
            true
        } else {
            false
        }
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        let modulus = self.atom()?;
        let mut suffixes = Vec::new();
        loop {
            match self.peek() {
                Some(b'/') => {
                    self.pos += 1;
                    self.expect(b'(')?;
                    let mut gens = vec![self.int()?];
                    while self.peek() == Some(b',') {
                        self.pos += 1;
                        gens.push(self.int()?);
                    }
                    self.expect(b')')?;
                    suffixes.push(Suffix::Quotient(gens));
                }
                Some(b'(') => {
                    if !self.try_idealize() {
                        return self.err("expected '(+)'");
                    }
                    self.skip_ws();
                    if self.text[self.pos..].starts_with(b"self") {
                        self.pos += 4;
                        suffixes.push(Suffix::IdealizeSelf);
                    } else if self.peek() == Some(b'Z') {
                        self.pos += 1;
                        suffixes.push(Suffix::IdealizeZ(self.int()?));
                    } else {
                        return self.err("expected 'self' or 'Z<m>' after '(+)'");
                    }
                }
                _ => break,
            }
        }
        Ok(Factor { modulus, suffixes })
    }

    fn ring(&mut self) -> Result<RingSpecAst, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'x') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(RingSpecAst { factors })
    }
}

/// Parse a ring-spec string; rejects exactly the strings outside the grammar.
pub fn parse_ring_spec(text: &str) -> Result<RingSpecAst, ParseError> {
    let mut p = Parser::new(text);
    let ast = p.ring()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return p.err("trailing input");
    }
    Ok(ast)
}

#[derive(Debug)]
pub enum EvalError {
    Core(Error),
    Cap { order: usize, cap: usize },
    BadElement { index: u32, order: usize },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Core(e) => write!(f, "{e}"),
            EvalError::Cap { order, cap } => {
                write!(f, "ring order {order} exceeds --max-order {cap}")
            }
            EvalError::BadElement { index, order } => {
                write!(
                    f,
                    "element index {index} out of range for ring of order {order}"
                )
            }
        }
    }
}

impl std::error::Error for EvalError {}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Core(e)
    }
}

fn check_cap(r: FiniteRing, cap: usize) -> Result<FiniteRing, EvalError> {
    if r.order() > cap {
        Err(EvalError::Cap {
            order: r.order(),
            cap,
        })
    } else {
        Ok(r)
    }
}

/// Evaluate an AST to operation tables, enforcing the order cap at every
/// construction step.
pub fn eval(ast: &RingSpecAst, max_order: usize) -> Result<FiniteRing, EvalError> {
    let mut product: Option<FiniteRing> = None;
    for factor in &ast.factors {
        let mut ring = check_cap(make_zn(factor.modulus as usize)?, max_order)?;
        for suffix in &factor.suffixes {
            ring = match suffix {
                Suffix::Quotient(gens) => {
                    let mut elems = Vec::new();
                    for &g in gens {
                        if g as usize >= ring.order() {
                            return Err(EvalError::BadElement {
                                index: g,
                                order: ring.order(),
                            });
                        }
                        elems.push(Elem(g as u16));
                    }
                    let ideal = srlab_core::ideal::generated_ideal(&ring, &elems);
                    quotient_ring(&ring, &ideal)?.quotient
                }
                Suffix::IdealizeSelf => {
                    check_cap(idealization(&ring, ModuleSpec::SelfModule)?, max_order)?
                }
                Suffix::IdealizeZ(m) => check_cap(
                    idealization(&ring, ModuleSpec::Cyclic(*m as usize))?,
                    max_order,
                )?,
            };
        }
        product = Some(match product {
            None => ring,
            Some(acc) => check_cap(direct_product(&acc, &ring)?, max_order)?,
        });
    }
    Ok(product.expect("grammar guarantees at least one factor"))
}

/// Parse a comma-separated generator list (element indices) for mult sets
/// and ideals. Empty input means no generators.
pub fn parse_generators(text: &str) -> Result<Vec<u32>, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .enumerate()
        .map(|(i, part)| {
            part.trim().parse().map_err(|_| ParseError {
                pos: i,
                message: format!("bad element index '{}'", part.trim()),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_examples() {
        assert_eq!(
            parse_ring_spec("Z12").unwrap(),
            RingSpecAst {
                factors: vec![Factor {
                    modulus: 12,
                    suffixes: vec![]
                }]
            }
        );
        let prod = parse_ring_spec("Z2xZ3").unwrap();
        assert_eq!(prod.factors.len(), 2);
        assert_eq!(eval(&prod, 32).unwrap().order(), 6);
        let quot = parse_ring_spec("Z12/(6)").unwrap();
        assert_eq!(quot.factors[0].suffixes, vec![Suffix::Quotient(vec![6])]);
        assert_eq!(eval(&quot, 32).unwrap().order(), 6);
        let ide = parse_ring_spec("Z2(+)self").unwrap();
        assert_eq!(ide.factors[0].suffixes, vec![Suffix::IdealizeSelf]);
        assert_eq!(eval(&ide, 32).unwrap().order(), 4);
    }

    #[test]
    fn suffix_binds_tighter_than_product() {
        let ast = parse_ring_spec("Z2xZ12/(6)").unwrap();
        assert_eq!(ast.factors[0].suffixes, vec![]);
        assert_eq!(ast.factors[1].suffixes, vec![Suffix::Quotient(vec![6])]);
        assert_eq!(eval(&ast, 32).unwrap().order(), 12);
        let left = parse_ring_spec("Z12/(6)xZ2").unwrap();
        assert_eq!(left.factors[0].suffixes, vec![Suffix::Quotient(vec![6])]);
    }

    #[test]
    fn rejects_garbage_with_position() {
        for bad in [
            "", "Z", "Q5", "Z6x", "Z6/(", "Z6/()", "Z6(+)", "Z6(+)Q", "Z6 stuff", "xZ2",
        ] {
            assert!(parse_ring_spec(bad).is_err(), "{bad:?} should not parse");
        }
        let e = parse_ring_spec("Z6/(2,a)").unwrap_err();
        assert!(e.pos > 0);
    }

    #[test]
    fn render_round_trips() {
        for text in [
            "Z12",
            "Z2xZ3",
            "Z12/(6)",
            "Z2(+)self",
            "Z4(+)Z2",
            "Z12/(6)/(2)",
            "Z2xZ3xZ5",
        ] {
            let ast = parse_ring_spec(text).unwrap();
            assert_eq!(render(&ast), text);
            assert_eq!(parse_ring_spec(&render(&ast)).unwrap(), ast);
        }
    }

    #[test]
    fn eval_enforces_cap() {
        let ast = parse_ring_spec("Z8xZ8").unwrap();
        assert!(matches!(
            eval(&ast, 32),
            Err(EvalError::Cap { order: 64, .. })
        ));
        assert!(eval(&ast, 64).is_ok());
        let bad = parse_ring_spec("Z6/(9)").unwrap();
        assert!(matches!(eval(&bad, 32), Err(EvalError::BadElement { .. })));
    }

    #[test]
    fn quotient_chain_evaluates() {
        let ast = parse_ring_spec("Z12/(6)/(2)").unwrap();
        // Z12/(6) ~ Z6, then /(2) quotients by the image ideal {0,2,4}
        assert_eq!(eval(&ast, 32).unwrap().order(), 2);
    }

    #[test]
    fn generator_lists() {
        assert_eq!(parse_generators("").unwrap(), Vec::<u32>::new());
        assert_eq!(parse_generators("3").unwrap(), vec![3]);
        assert_eq!(parse_generators(" 2, 4 ").unwrap(), vec![2, 4]);
        assert!(parse_generators("2,x").is_err());
    }
}
