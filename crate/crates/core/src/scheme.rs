//! Complex schemes in Viro notation and their numerical characteristics.
//!
//! A scheme is a forest of signed ovals (nesting order) together with a flag
//! telling whether a one-sided component `J` is present. Textual form:
//!
//! ```text
//! scheme := ["J"] group { group }
//! group  := count sign [ "<" group { group } ">" ]
//! ```
//!
//! so `J 1-<2-> 2+` is `J ⊔ 1⁻⟨2⁻⟩ ⊔ 2⁺`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Sign of an oval: `Plus` for a positive oval, `Minus` for a negative one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Oval {
    pub sign: Sign,
    /// Ovals immediately inside this one.
    pub children: Vec<Oval>,
}

impl Oval {
    pub fn new(sign: Sign, children: Vec<Oval>) -> Self {
        Self { sign, children }
    }

    pub fn empty(sign: Sign) -> Self {
        Self::new(sign, Vec::new())
    }

    fn count(&self) -> usize {
        1 + self.children.iter().map(Oval::count).sum::<usize>()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SchemeKind {
    /// Contains the one-sided component `J`.
    Odd,
    Even,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexScheme {
    kind: SchemeKind,
    top: Vec<Oval>,
}

impl ComplexScheme {
    pub fn new(kind: SchemeKind, top: Vec<Oval>) -> Result<Self> {
        if kind == SchemeKind::Even && top.is_empty() {
            return Err(Error::EmptyEvenScheme);
        }
        Ok(Self { kind, top })
    }

    /// The scheme consisting of the line `J` alone.
    pub fn line() -> Self {
        Self { kind: SchemeKind::Odd, top: Vec::new() }
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn is_odd(&self) -> bool {
        self.kind == SchemeKind::Odd
    }

    pub fn top(&self) -> &[Oval] {
        &self.top
    }

    pub fn oval_count(&self) -> usize {
        self.top.iter().map(Oval::count).sum()
    }

    /// Ovals in preorder with parent links.
    pub fn flatten(&self) -> Vec<FlatOval> {
        fn walk(ovals: &[Oval], parent: Option<usize>, depth: usize, out: &mut Vec<FlatOval>) -> Vec<usize> {
            let mut ids = Vec::with_capacity(ovals.len());
            for o in ovals {
                let id = out.len();
                ids.push(id);
                out.push(FlatOval { sign: o.sign, depth, parent, children: Vec::new() });
                let children = walk(&o.children, Some(id), depth + 1, out);
                out[id].children = children;
            }
            ids
        }
        let mut out = Vec::with_capacity(self.oval_count());
        walk(&self.top, None, 0, &mut out);
        out
    }
}

/// One oval of a flattened scheme. Indices refer to the preorder numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatOval {
    pub sign: Sign,
    pub depth: usize,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

impl FlatOval {
    /// Region bordering this oval from outside: 0 is the outer region, `i + 1`
    /// is the region inside oval `i`.
    pub fn outer_region(&self) -> usize {
        self.parent.map_or(0, |p| p + 1)
    }
}

pub fn parse_scheme(text: &str) -> Result<ComplexScheme> {
    Parser::new(text).scheme()
}

pub fn render_scheme(s: &ComplexScheme) -> String {
    fn groups(ovals: &[Oval], out: &mut String) {
        let mut i = 0;
        let mut first = true;
        while i < ovals.len() {
            let mut j = i + 1;
            while j < ovals.len() && ovals[j] == ovals[i] {
                j += 1;
            }
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&(j - i).to_string());
            out.push(ovals[i].sign.symbol());
            if !ovals[i].children.is_empty() {
                out.push('<');
                groups(&ovals[i].children, out);
                out.push('>');
            }
            i = j;
        }
    }

    let mut out = String::new();
    if s.is_odd() {
        out.push('J');
        if !s.top.is_empty() {
            out.push(' ');
        }
    }
    groups(&s.top, &mut out);
    out
}

impl fmt::Display for ComplexScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_scheme(self))
    }
}

impl std::str::FromStr for ComplexScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_scheme(s)
    }
}

impl Serialize for ComplexScheme {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&render_scheme(self))
    }
}

impl<'de> Deserialize<'de> for ComplexScheme {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_scheme(&text).map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self { src: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
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

    fn scheme(mut self) -> Result<ComplexScheme> {
        let kind = if self.peek() == Some(b'J') {
            self.pos += 1;
            SchemeKind::Odd
        } else {
            SchemeKind::Even
        };
        let mut top = Vec::new();
        while let Some(c) = self.peek() {
            if c == b'J' {
                return self.err("`J` may appear only once, at the start of the scheme");
            }
            self.group(&mut top)?;
        }
        if kind == SchemeKind::Even && top.is_empty() {
            return self.err("empty input");
        }
        ComplexScheme::new(kind, top)
    }

    fn group(&mut self, out: &mut Vec<Oval>) -> Result<()> {
        let count = self.count()?;
        let sign = match self.peek() {
            Some(b'+') => Sign::Plus,
            Some(b'-') => Sign::Minus,
            Some(_) => return self.err("expected `+` or `-`"),
            None => return self.err("unexpected end of input, expected `+` or `-`"),
        };
        self.pos += 1;
        let mut children = Vec::new();
        if self.peek() == Some(b'<') {
            self.pos += 1;
            loop {
                match self.peek() {
                    Some(b'>') => break,
                    Some(b'J') => return self.err("`J` is only allowed at top level"),
                    Some(_) => self.group(&mut children)?,
                    None => return self.err("unclosed `<`"),
                }
            }
            if children.is_empty() {
                return self.err("empty `<>`");
            }
            self.pos += 1;
        }
        let oval = Oval { sign, children };
        out.extend(std::iter::repeat_n(oval, count));
        Ok(())
    }

    fn count(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.err("expected an oval count");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<usize>() {
            Ok(0) => {
                self.pos = start;
                self.err("oval count must be positive")
            }
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.err("oval count too large")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OvalStats {
    pub epsilon: i64,
    pub depth: usize,
    pub parity: u8,
    pub pi_plus: usize,
    pub pi_minus: usize,
    /// Number of ovals immediately inside.
    pub children: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionStats {
    pub parity: u8,
    pub lambda_plus: usize,
    pub lambda_minus: usize,
    pub euler_char: i64,
}

/// Numerical characteristics of a scheme. Per-oval data is in preorder; region
/// 0 is the outer region and region `i + 1` lies directly inside oval `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeStats {
    pub l: usize,
    pub lambda_plus: usize,
    pub lambda_minus: usize,
    pub pi_plus: usize,
    pub pi_minus: usize,
    pub beta0: usize,
    /// Odd ovals, and among them: empty ones, ones with exactly one child,
    /// ones with more than one child.
    pub n: usize,
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
    pub outer_ovals: usize,
    pub ovals: Vec<OvalStats>,
    pub regions: Vec<RegionStats>,
}

/// Two nested ovals form a positive injective pair iff their signs differ.
fn pair_is_positive(a: Sign, b: Sign) -> bool {
    a != b
}

pub fn stats(s: &ComplexScheme) -> SchemeStats {
    let flat = s.flatten();
    let l = flat.len();

    let mut ovals: Vec<OvalStats> = flat
        .iter()
        .map(|o| OvalStats {
            epsilon: o.sign.value(),
            depth: o.depth,
            parity: (o.depth % 2) as u8,
            pi_plus: 0,
            pi_minus: 0,
            children: o.children.len(),
        })
        .collect();

    let (mut pi_plus, mut pi_minus) = (0, 0);
    for (i, o) in flat.iter().enumerate() {
        let mut anc = o.parent;
        while let Some(a) = anc {
            if pair_is_positive(o.sign, flat[a].sign) {
                pi_plus += 1;
                ovals[i].pi_plus += 1;
                ovals[a].pi_plus += 1;
            } else {
                pi_minus += 1;
                ovals[i].pi_minus += 1;
                ovals[a].pi_minus += 1;
            }
            anc = flat[a].parent;
        }
    }

    let outer_ovals = flat.iter().filter(|o| o.parent.is_none()).count();
    let mut regions = Vec::with_capacity(l + 1);
    regions.push(RegionStats { parity: 0, lambda_plus: 0, lambda_minus: 0, euler_char: 1 - outer_ovals as i64 });
    for o in &flat {
        let (mut lp, mut lm) = (0, 0);
        let mut cur = Some(o);
        while let Some(c) = cur {
            match c.sign {
                Sign::Plus => lp += 1,
                Sign::Minus => lm += 1,
            }
            cur = c.parent.map(|p| &flat[p]);
        }
        regions.push(RegionStats {
            parity: ((o.depth + 1) % 2) as u8,
            lambda_plus: lp,
            lambda_minus: lm,
            euler_char: 1 - o.children.len() as i64,
        });
    }

    let lambda_plus = flat.iter().filter(|o| o.sign == Sign::Plus).count();
    let odd: Vec<&FlatOval> = flat.iter().filter(|o| o.depth % 2 == 1).collect();
    SchemeStats {
        l,
        lambda_plus,
        lambda_minus: l - lambda_plus,
        pi_plus,
        pi_minus,
        beta0: if s.is_odd() { l + 1 } else { l },
        n: odd.len(),
        n_plus: odd.iter().filter(|o| o.children.is_empty()).count(),
        n_zero: odd.iter().filter(|o| o.children.len() == 1).count(),
        n_minus: odd.iter().filter(|o| o.children.len() > 1).count(),
        outer_ovals,
        ovals,
        regions,
    }
}
