//! A small expression language over f-vectors.
//!
//! Grammar: `expr := name '(' expr, ... ')' | integer`.  Functions:
//!
//! * `simplex(d)`, `cross(d)`, `cube(d)`, `cyclic(d, n)` — closed-form
//!   families;
//! * `dual(x)` — reverse; `product(x, y)`, `join(x, y)`, `sum(x, y)` —
//!   convolution rules;
//! * `stack(x, N)` — stack pyramids onto `N` simplicial facets;
//!   `glue(x, y)` — connected sum along a simplicial facet of each;
//!   `truncv(x)` — cut off one simple vertex.
//!
//! The last three are only meaningful under structural preconditions that an
//! f-vector alone cannot certify, so the evaluator carries a set of shape
//! flags through every operation and refuses to apply an operation whose
//! precondition flag is not established.  The flags are sound
//! under-approximations: `true` is only set when the property is guaranteed
//! by construction.

use anyhow::{anyhow, bail, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use polylab::fvector::{self, FVector};

/// Structural facts tracked alongside an f-vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
    /// The polytope is a simplex.
    pub simplex: bool,
    /// Every facet is a simplex.
    pub simplicial: bool,
    /// Every vertex lies on exactly `d` facets.
    pub simple: bool,
    /// At least one facet is a simplex.
    pub has_simplicial_facet: bool,
    /// At least one vertex is simple.
    pub has_simple_vertex: bool,
}

impl Flags {
    fn all(value: bool) -> Flags {
        Flags {
            simplex: value,
            simplicial: value,
            simple: value,
            has_simplicial_facet: value,
            has_simple_vertex: value,
        }
    }

    /// Flags of the polar dual.
    fn dual(self) -> Flags {
        Flags {
            simplex: self.simplex,
            simplicial: self.simple,
            simple: self.simplicial,
            has_simplicial_facet: self.has_simple_vertex,
            has_simple_vertex: self.has_simplicial_facet,
        }
    }
}

/// An f-vector together with its certified structural flags.
#[derive(Debug, Clone)]
pub struct TaggedF {
    pub f: FVector,
    pub flags: Flags,
}

impl TaggedF {
    fn new(f: FVector, flags: Flags) -> TaggedF {
        let mut t = TaggedF { f, flags };
        // In dimensions <= 2 every polytope is both simple and simplicial.
        if t.f.dim() <= 2 {
            let is_simplex = *t.f.entry(0) == BigInt::from(t.f.dim() + 1);
            t.flags = Flags::all(true);
            t.flags.simplex = is_simplex;
        }
        t
    }
}

// ---------------------------------------------------------------- parsing

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    LPar,
    RPar,
    Comma,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                out.push((i, Tok::LPar));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RPar));
                i += 1;
            }
            ',' => {
                out.push((i, Tok::Comma));
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                out.push((start, Tok::Int(text.parse::<BigInt>()?)));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
            }
            _ => bail!("unexpected character `{c}` at position {i}"),
        }
    }
    Ok(out)
}

#[derive(Debug)]
enum Ast {
    Call(String, Vec<Ast>),
    Int(BigInt),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn expr(&mut self) -> Result<Ast> {
        let (at, tok) = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| anyhow!("unexpected end of expression"))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(Ast::Int(n)),
            Tok::Ident(name) => {
                if self.peek() != Some(&Tok::LPar) {
                    bail!("expected `(` after `{name}` at position {at}");
                }
                self.pos += 1; // consume (
                let mut args = Vec::new();
                if self.peek() == Some(&Tok::RPar) {
                    self.pos += 1;
                    return Ok(Ast::Call(name, args));
                }
                loop {
                    args.push(self.expr()?);
                    match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
                        Some(Tok::Comma) => self.pos += 1,
                        Some(Tok::RPar) => {
                            self.pos += 1;
                            break;
                        }
                        _ => bail!("expected `,` or `)` in arguments of `{name}`"),
                    }
                }
                Ok(Ast::Call(name, args))
            }
            other => bail!("unexpected token {other:?} at position {at}"),
        }
    }
}

// ------------------------------------------------------------- evaluation

enum Value {
    Poly(TaggedF),
    Num(BigInt),
}

fn as_poly(v: Value, ctx: &str) -> Result<TaggedF> {
    match v {
        Value::Poly(t) => Ok(t),
        Value::Num(_) => bail!("{ctx}: expected an f-vector expression, got a number"),
    }
}

fn as_num(v: Value, ctx: &str) -> Result<BigInt> {
    match v {
        Value::Num(n) => Ok(n),
        Value::Poly(_) => bail!("{ctx}: expected a number, got an f-vector expression"),
    }
}

fn as_usize(v: Value, ctx: &str) -> Result<usize> {
    let n = as_num(v, ctx)?;
    n.try_into().map_err(|_| anyhow!("{ctx}: value out of range"))
}

fn eval(ast: Ast) -> Result<Value> {
    let (name, args) = match ast {
        Ast::Int(n) => return Ok(Value::Num(n)),
        Ast::Call(name, args) => (name, args),
    };
    let n_args = args.len();
    let vals: Vec<Value> = args.into_iter().map(eval).collect::<Result<_>>()?;
    let mut vals = vals.into_iter();
    let mut next = || vals.next().expect("arity checked");
    let arity_check = |want: usize| -> Result<()> {
        if n_args != want {
            bail!("`{name}` takes {want} argument(s), got {n_args}");
        }
        Ok(())
    };

    let tagged = match name.as_str() {
        "simplex" => {
            arity_check(1)?;
            let d = as_usize(next(), "simplex")?;
            TaggedF::new(fvector::f_simplex(d)?, Flags::all(true))
        }
        "cross" => {
            arity_check(1)?;
            let d = as_usize(next(), "cross")?;
            let mut flags = Flags::all(false);
            flags.simplicial = true;
            flags.has_simplicial_facet = true;
            flags.simplex = d <= 1;
            TaggedF::new(fvector::f_cross(d)?, flags)
        }
        "cube" => {
            arity_check(1)?;
            let d = as_usize(next(), "cube")?;
            let mut flags = Flags::all(false);
            flags.simple = true;
            flags.has_simple_vertex = true;
            flags.simplex = d <= 1;
            TaggedF::new(fvector::f_cube(d)?, flags)
        }
        "cyclic" => {
            arity_check(2)?;
            let d = as_usize(next(), "cyclic")?;
            let n = as_usize(next(), "cyclic")?;
            let f = fvector::f_cyclic(d, n)?;
            let flags = if n == d + 1 {
                Flags::all(true)
            } else {
                let mut fl = Flags::all(false);
                fl.simplicial = true;
                fl.has_simplicial_facet = true;
                fl
            };
            TaggedF::new(f, flags)
        }
        "dual" => {
            arity_check(1)?;
            let x = as_poly(next(), "dual")?;
            TaggedF::new(x.f.reversed(), x.flags.dual())
        }
        "product" => {
            arity_check(2)?;
            let x = as_poly(next(), "product")?;
            let y = as_poly(next(), "product")?;
            let flags = product_flags(&x, &y);
            TaggedF::new(fvector::f_product(&x.f, &y.f), flags)
        }
        "join" => {
            arity_check(2)?;
            let x = as_poly(next(), "join")?;
            let y = as_poly(next(), "join")?;
            let both = x.flags.simplex && y.flags.simplex;
            let flags = Flags {
                simplex: both,
                simplicial: both,
                simple: both,
                has_simplicial_facet: (x.flags.simplex && y.flags.has_simplicial_facet)
                    || (y.flags.simplex && x.flags.has_simplicial_facet),
                has_simple_vertex: (x.flags.simplex && y.flags.has_simple_vertex)
                    || (y.flags.simplex && x.flags.has_simple_vertex),
            };
            TaggedF::new(fvector::f_join(&x.f, &y.f), flags)
        }
        "sum" => {
            arity_check(2)?;
            let x = as_poly(next(), "sum")?;
            let y = as_poly(next(), "sum")?;
            // free sum is the dual of the product of the duals
            let dx = TaggedF::new(x.f.reversed(), x.flags.dual());
            let dy = TaggedF::new(y.f.reversed(), y.flags.dual());
            let flags = product_flags(&dx, &dy).dual();
            TaggedF::new(fvector::f_free_sum(&x.f, &y.f), flags)
        }
        "stack" => {
            arity_check(2)?;
            let x = as_poly(next(), "stack")?;
            let n = as_num(next(), "stack")?;
            if n.is_negative() {
                bail!("stack: count must be nonnegative");
            }
            if x.f.dim() < 2 {
                bail!("stack: needs dimension >= 2");
            }
            if !x.flags.has_simplicial_facet {
                bail!("stack: operand has no certified simplicial facet");
            }
            if n.is_zero() {
                x
            } else {
                let flags = Flags {
                    simplex: false,
                    simplicial: x.flags.simplicial,
                    simple: false,
                    has_simplicial_facet: true,
                    has_simple_vertex: true, // each new apex is simple
                };
                TaggedF::new(fvector::f_stack(&x.f, &n), flags)
            }
        }
        "glue" => {
            arity_check(2)?;
            let x = as_poly(next(), "glue")?;
            let y = as_poly(next(), "glue")?;
            if !x.flags.has_simplicial_facet {
                bail!("glue: left operand has no certified simplicial facet");
            }
            if !y.flags.has_simplicial_facet {
                bail!("glue: right operand has no certified simplicial facet");
            }
            let flags = Flags {
                simplex: false,
                simplicial: x.flags.simplicial && y.flags.simplicial,
                simple: false,
                // all remaining facets of a fully simplicial summand survive
                has_simplicial_facet: x.flags.simplicial || y.flags.simplicial,
                has_simple_vertex: false,
            };
            TaggedF::new(fvector::f_glue(&x.f, &y.f)?, flags)
        }
        "truncv" => {
            arity_check(1)?;
            let x = as_poly(next(), "truncv")?;
            if x.f.dim() < 2 {
                bail!("truncv: needs dimension >= 2");
            }
            if !x.flags.has_simple_vertex {
                bail!("truncv: operand has no certified simple vertex");
            }
            let flags = Flags {
                simplex: false,
                simplicial: false,
                simple: x.flags.simple,
                has_simplicial_facet: true, // the cut leaves a simplex facet
                has_simple_vertex: true,    // the d new vertices are simple
            };
            TaggedF::new(fvector::f_truncate_vertex(&x.f), flags)
        }
        other => bail!("unknown function `{other}`"),
    };
    Ok(Value::Poly(tagged))
}

fn product_flags(x: &TaggedF, y: &TaggedF) -> Flags {
    Flags {
        simplex: false,
        simplicial: false,
        simple: x.flags.simple && y.flags.simple,
        // a product facet F x Q is a simplex only when one factor is a
        // segment and the other a simplex (then F is a point)
        has_simplicial_facet: (x.f.dim() == 1 && y.flags.simplex)
            || (y.f.dim() == 1 && x.flags.simplex),
        has_simple_vertex: x.flags.has_simple_vertex && y.flags.has_simple_vertex,
    }
}

/// Parses and evaluates an expression.
pub fn evaluate(src: &str) -> Result<TaggedF> {
    let toks = lex(src)?;
    if toks.is_empty() {
        bail!("empty expression");
    }
    let mut p = Parser { toks, pos: 0 };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        bail!("trailing input after expression (position {})", p.toks[p.pos].0);
    }
    match eval(ast)? {
        Value::Poly(t) => Ok(t),
        Value::Num(_) => bail!("expression evaluates to a number, not an f-vector"),
    }
}
