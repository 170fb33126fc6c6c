//! Text syntax for algebras and modules.
//!
//! ```text
//! Spec := Simple ("x" Simple)*        Simple := ("A"|"B"|"C"|"D") integer
//! M := T ("+" T)*                     T := F ("*" F)*
//! F := "L(" coords ")" ("#L(" coords ")")* | "wedge2(" M ")" | "sym2(" M ")"
//!    | "dual(" M ")" | "triv" | "nat" | integer F | "(" M ")"
//! ```
//!
//! `+` is the direct sum, `*` the tensor product over the same algebra and
//! `#` joins one weight block per simple factor.

use std::fmt;

use thiserror::Error;

use crate::liealg::SemisimpleSpec;
use crate::repbuilder::{realize_label, IrrLabel, ModuleDescriptor, RepError, Representation};
use crate::rootdata::{DominantWeight, Family, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("error at byte {offset}: {message}")]
    Semantic { offset: usize, message: String },
    #[error(transparent)]
    Rep(#[from] RepError),
}

impl ExprError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ExprError::Syntax { offset, .. } | ExprError::Semantic { offset, .. } => Some(*offset),
            ExprError::Rep(_) => None,
        }
    }
}

fn syntax<T>(offset: usize, message: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError::Syntax { offset, message: message.into() })
}

fn semantic<T>(offset: usize, message: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError::Semantic { offset, message: message.into() })
}

/// Module expression tree. `Tensor` and `DirectSum` have at least two
/// children; `Irr` has one coordinate block per simple factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleExpr {
    Irr(Vec<Vec<u32>>),
    Tensor(Vec<ModuleExpr>),
    DirectSum(Vec<ModuleExpr>),
    Multiple(u32, Box<ModuleExpr>),
    Wedge2(Box<ModuleExpr>),
    Sym2(Box<ModuleExpr>),
    Dual(Box<ModuleExpr>),
    Trivial,
    Natural,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ExprError> {
        if self.eat(s) {
            Ok(())
        } else {
            syntax(self.pos, format!("expected '{s}'"))
        }
    }

    fn integer(&mut self) -> Result<(u64, usize), ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return syntax(start, "expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse() {
            Ok(v) => Ok((v, start)),
            Err(_) => syntax(start, "integer too large"),
        }
    }

    fn finish(&mut self) -> Result<(), ExprError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => syntax(self.pos, "unexpected trailing input"),
        }
    }
}

/// Parses `A1xA2`, `D5`, ...
pub fn parse_algebra(text: &str) -> Result<SemisimpleSpec, ExprError> {
    let mut c = Cursor::new(text);
    let mut factors = Vec::new();
    loop {
        let start = match c.peek() {
            Some(_) => c.pos,
            None => return syntax(c.pos, "expected a simple type"),
        };
        let family = match c.src[start] {
            b'A' => Family::A,
            b'B' => Family::B,
            b'C' => Family::C,
            b'D' => Family::D,
            b'E' | b'F' | b'G' => return semantic(start, "exceptional types are not supported"),
            _ => return syntax(start, "expected one of A, B, C, D"),
        };
        c.pos += 1;
        if !c.src.get(c.pos).is_some_and(u8::is_ascii_digit) {
            return syntax(c.pos, "expected a rank");
        }
        let (rank, _) = c.integer()?;
        match SimpleType::new(family, rank as usize) {
            Ok(t) => factors.push(t),
            Err(e) => return semantic(start, e.to_string()),
        }
        if !c.eat("x") {
            break;
        }
    }
    c.finish()?;
    Ok(SemisimpleSpec::new(factors))
}

struct Parser<'a, 's> {
    c: Cursor<'a>,
    spec: &'s SemisimpleSpec,
}

impl Parser<'_, '_> {
    fn sum(&mut self) -> Result<ModuleExpr, ExprError> {
        let mut terms = vec![self.tensor()?];
        while self.c.eat("+") {
            terms.push(self.tensor()?);
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { ModuleExpr::DirectSum(terms) })
    }

    fn tensor(&mut self) -> Result<ModuleExpr, ExprError> {
        let mut factors = vec![self.factor()?];
        while self.c.eat("*") {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { ModuleExpr::Tensor(factors) })
    }

    fn unary(&mut self, kw: &str) -> Result<Box<ModuleExpr>, ExprError> {
        self.c.pos += kw.len();
        self.c.expect("(")?;
        let inner = self.sum()?;
        self.c.expect(")")?;
        Ok(Box::new(inner))
    }

    fn factor(&mut self) -> Result<ModuleExpr, ExprError> {
        let Some(b) = self.c.peek() else {
            return syntax(self.c.pos, "unexpected end of input");
        };
        let start = self.c.pos;
        let rest = &self.c.src[start..];
        if b.is_ascii_digit() {
            let (k, at) = self.c.integer()?;
            if k == 0 {
                return semantic(at, "multiplicity must be positive");
            }
            let k = u32::try_from(k).or_else(|_| syntax(at, "multiplicity too large"))?;
            return Ok(ModuleExpr::Multiple(k, Box::new(self.factor()?)));
        }
        if rest.starts_with(b"wedge2") {
            return Ok(ModuleExpr::Wedge2(self.unary("wedge2")?));
        }
        if rest.starts_with(b"sym2") {
            return Ok(ModuleExpr::Sym2(self.unary("sym2")?));
        }
        if rest.starts_with(b"dual") {
            return Ok(ModuleExpr::Dual(self.unary("dual")?));
        }
        if rest.starts_with(b"triv") {
            self.c.pos += 4;
            return Ok(ModuleExpr::Trivial);
        }
        if rest.starts_with(b"nat") {
            self.c.pos += 3;
            if self.spec.len() != 1 {
                return semantic(start, "nat needs a simple algebra");
            }
            return Ok(ModuleExpr::Natural);
        }
        if b == b'(' {
            self.c.pos += 1;
            let inner = self.sum()?;
            self.c.expect(")")?;
            return Ok(inner);
        }
        if b == b'L' {
            return self.irr();
        }
        syntax(start, "expected a module")
    }

    fn irr(&mut self) -> Result<ModuleExpr, ExprError> {
        let start = self.c.pos;
        let mut blocks = Vec::new();
        loop {
            let block_start = self.c.pos;
            self.c.expect("L")?;
            self.c.expect("(")?;
            let mut coords = Vec::new();
            loop {
                let (v, at) = self.c.integer()?;
                coords.push(u32::try_from(v).or_else(|_| syntax(at, "coordinate too large"))?);
                if !self.c.eat(",") {
                    break;
                }
            }
            self.c.expect(")")?;
            let k = blocks.len();
            if let Some(t) = self.spec.factors.get(k) {
                if coords.len() != t.rank {
                    return semantic(block_start, format!("{t} needs {} coordinates, got {}", t.rank, coords.len()));
                }
            }
            blocks.push(coords);
            if !self.c.eat("#") {
                break;
            }
        }
        if blocks.len() != self.spec.len() {
            return semantic(start, format!("{} weight blocks for {} simple factors", blocks.len(), self.spec.len()));
        }
        Ok(ModuleExpr::Irr(blocks))
    }
}

/// Parses a module expression, checking block counts and ranks against `spec`.
pub fn parse_module(text: &str, spec: &SemisimpleSpec) -> Result<ModuleExpr, ExprError> {
    let mut p = Parser { c: Cursor::new(text), spec };
    let m = p.sum()?;
    p.c.finish()?;
    Ok(m)
}

fn coords(c: &[u32]) -> String {
    c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl ModuleExpr {
    fn is_factor(&self) -> bool {
        !matches!(self, ModuleExpr::Tensor(_) | ModuleExpr::DirectSum(_))
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, pretty: bool) -> fmt::Result {
        let child = |e: &ModuleExpr, f: &mut fmt::Formatter<'_>, wrap: bool| -> fmt::Result {
            if wrap {
                write!(f, "(")?;
                e.write(f, pretty)?;
                write!(f, ")")
            } else {
                e.write(f, pretty)
            }
        };
        match self {
            ModuleExpr::Irr(blocks) => {
                let parts: Vec<String> = blocks
                    .iter()
                    .map(|b| {
                        if pretty {
                            format!("L({})", DominantWeight(b.clone()).pretty())
                        } else {
                            format!("L({})", coords(b))
                        }
                    })
                    .collect();
                write!(f, "{}", parts.join("#"))
            }
            ModuleExpr::Tensor(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    child(x, f, !x.is_factor())?;
                }
                Ok(())
            }
            ModuleExpr::DirectSum(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    child(x, f, matches!(x, ModuleExpr::DirectSum(_)))?;
                }
                Ok(())
            }
            ModuleExpr::Multiple(k, x) => {
                write!(f, "{k}")?;
                if matches!(**x, ModuleExpr::Multiple(..)) {
                    write!(f, " ")?;
                }
                child(x, f, !x.is_factor())
            }
            ModuleExpr::Wedge2(x) => {
                write!(f, "wedge2(")?;
                x.write(f, pretty)?;
                write!(f, ")")
            }
            ModuleExpr::Sym2(x) => {
                write!(f, "sym2(")?;
                x.write(f, pretty)?;
                write!(f, ")")
            }
            ModuleExpr::Dual(x) => {
                write!(f, "dual(")?;
                x.write(f, pretty)?;
                write!(f, ")")
            }
            ModuleExpr::Trivial => write!(f, "triv"),
            ModuleExpr::Natural => write!(f, "nat"),
        }
    }

    /// Human-readable form with weights such as `L(w1+2w3)`; not parseable.
    pub fn pretty(&self) -> String {
        struct P<'a>(&'a ModuleExpr);
        impl fmt::Display for P<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write(f, true)
            }
        }
        P(self).to_string()
    }

    /// The expression of a decomposed module: a sum of multiples of
    /// irreducibles. `None` for the zero module, which has no syntax.
    pub fn from_descriptor(d: &ModuleDescriptor) -> Option<ModuleExpr> {
        let mut terms: Vec<ModuleExpr> = d
            .terms()
            .iter()
            .map(|(l, m)| {
                let irr = ModuleExpr::Irr(l.0.iter().map(|w| w.0.clone()).collect());
                if *m == 1 {
                    irr
                } else {
                    ModuleExpr::Multiple(*m, Box::new(irr))
                }
            })
            .collect();
        match terms.len() {
            0 => None,
            1 => terms.pop(),
            _ => Some(ModuleExpr::DirectSum(terms)),
        }
    }

    pub fn evaluate(&self, spec: &SemisimpleSpec) -> Result<Representation, ExprError> {
        Ok(match self {
            ModuleExpr::Irr(blocks) => {
                realize_label(spec, &IrrLabel(blocks.iter().map(|b| DominantWeight(b.clone())).collect()))?
            }
            ModuleExpr::Tensor(xs) => {
                let mut acc = xs[0].evaluate(spec)?;
                for x in &xs[1..] {
                    acc = acc.tensor(&x.evaluate(spec)?)?;
                }
                acc
            }
            ModuleExpr::DirectSum(xs) => {
                Representation::direct_sum(&xs.iter().map(|x| x.evaluate(spec)).collect::<Result<Vec<_>, _>>()?)?
            }
            ModuleExpr::Multiple(k, x) => x.evaluate(spec)?.multiple(*k as usize),
            ModuleExpr::Wedge2(x) => x.evaluate(spec)?.wedge2(),
            ModuleExpr::Sym2(x) => x.evaluate(spec)?.sym2(),
            ModuleExpr::Dual(x) => x.evaluate(spec)?.dual(),
            ModuleExpr::Trivial => Representation::trivial_over(spec, 1)?,
            ModuleExpr::Natural => match spec.factors.as_slice() {
                [t] => Representation::natural(*t)?,
                _ => return semantic(0, "nat needs a simple algebra"),
            },
        })
    }

    /// Decomposition of the evaluated module.
    pub fn descriptor(&self, spec: &SemisimpleSpec) -> Result<ModuleDescriptor, ExprError> {
        Ok(self.evaluate(spec)?.decompose()?)
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

/// Canonical text of a module expression.
pub fn print_module(m: &ModuleExpr) -> String {
    m.to_string()
}

/// Parses a descriptor such as `2L(1,0) + L(0,1)`; the expression must be a
/// sum of multiples of irreducibles.
pub fn parse_descriptor(text: &str, spec: &SemisimpleSpec) -> Result<ModuleDescriptor, ExprError> {
    fn collect(m: &ModuleExpr, k: u32, out: &mut Vec<(IrrLabel, u32)>) -> bool {
        match m {
            ModuleExpr::Irr(b) => {
                out.push((IrrLabel(b.iter().map(|c| DominantWeight(c.clone())).collect()), k));
                true
            }
            ModuleExpr::Multiple(j, x) => collect(x, k * j, out),
            ModuleExpr::DirectSum(xs) => xs.iter().all(|x| collect(x, k, out)),
            _ => false,
        }
    }
    let m = parse_module(text, spec)?;
    let mut terms = Vec::new();
    if !collect(&m, 1, &mut terms) {
        return semantic(0, "expected a sum of irreducibles");
    }
    Ok(ModuleDescriptor::new(terms))
}
