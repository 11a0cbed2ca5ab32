//! Text form of real schemes.
//!
//! ```text
//! scheme    := comp ("u" comp)* | body
//! comp      := "@" TAG "(" body ")"
//! body      := "nc(" L "," S "," T ")" SIGN? "{" forest ("|" forest)* "}" | forest
//! forest    := "0" | item ("u" item)*
//! item      := NUM SIGN? ("<" forest ">")?
//! ```
//!
//! `NUM` copies of an oval, each enclosing the bracketed forest. `⊔` may be
//! used for `u`, and whitespace is ignored. Positions in errors are
//! character offsets into the input.

use super::{ComponentBody, ComponentScheme, Forest, NoncontractibleFamily, Oval, RealScheme, SchemeError, Sign};

pub fn parse_scheme(input: &str) -> Result<RealScheme, SchemeError> {
    let chars: Vec<(usize, char)> = input
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, if c == '⊔' { 'u' } else { c }))
        .collect();
    let mut p = Parser { chars, pos: 0, end: input.chars().count() };
    let components = p.scheme()?;
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    RealScheme::new(components)
}

pub fn print_scheme(scheme: &RealScheme) -> String {
    let comps = scheme.components();
    if comps.len() == 1 && comps[0].tag.is_none() {
        return print_body(&comps[0].body);
    }
    comps
        .iter()
        .map(|c| format!("@{}({})", c.tag.as_deref().unwrap_or(""), print_body(&c.body)))
        .collect::<Vec<_>>()
        .join("u")
}

fn print_body(body: &ComponentBody) -> String {
    match body {
        ComponentBody::Ovals(f) => print_forest(f),
        ComponentBody::Noncontractible(nc) => {
            let sign = nc.sign.map(|s| s.symbol().to_string()).unwrap_or_default();
            let slots: Vec<String> = nc.annuli.iter().map(print_forest).collect();
            format!("nc({},{},{}){}{{{}}}", nc.count(), nc.s, nc.t, sign, slots.join("|"))
        }
    }
}

fn print_forest(forest: &Forest) -> String {
    let mut f = forest.clone();
    canonicalize_forest(&mut f)
}

/// Canonical order: siblings ascending by (subtree size, text), equal
/// neighbours merged into one counted item.
pub(super) fn canonicalize_forest(forest: &mut Forest) -> String {
    let mut keyed: Vec<(usize, String, Oval)> = forest
        .0
        .drain(..)
        .map(|mut o| {
            let inner = canonicalize_forest(&mut o.interior);
            let text = oval_text(o.sign, &o.interior, &inner);
            (o.size(), text, o)
        })
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut items: Vec<(usize, String)> = Vec::new();
    for (_, text, o) in keyed {
        match items.last_mut() {
            Some((n, t)) if *t == text => *n += 1,
            _ => items.push((1, text)),
        }
        forest.0.push(o);
    }
    if items.is_empty() {
        return "0".into();
    }
    items.iter().map(|(n, t)| format!("{n}{t}")).collect::<Vec<_>>().join("u")
}

fn oval_text(sign: Option<Sign>, interior: &Forest, inner: &str) -> String {
    let mut s = String::new();
    if let Some(sign) = sign {
        s.push(sign.symbol());
    }
    if !interior.is_empty() {
        s.push('<');
        s.push_str(inner);
        s.push('>');
    }
    s
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn here(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i).unwrap_or(self.end)
    }

    fn error(&self, message: &str) -> SchemeError {
        let found = match self.peek() {
            Some(c) => format!("{message} (found '{c}')"),
            None => format!("{message} (found end of input)"),
        };
        SchemeError::Syntax { position: self.here(), message: found }
    }

    fn expect(&mut self, c: char) -> Result<(), SchemeError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn scheme(&mut self) -> Result<Vec<ComponentScheme>, SchemeError> {
        if self.peek() != Some('@') {
            let body = self.body()?;
            return Ok(vec![ComponentScheme { tag: None, body }]);
        }
        let mut comps = vec![self.component()?];
        while self.peek() == Some('u') {
            self.pos += 1;
            comps.push(self.component()?);
        }
        Ok(comps)
    }

    fn component(&mut self) -> Result<ComponentScheme, SchemeError> {
        self.expect('@')?;
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a surface component tag"));
        }
        let tag: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        self.expect('(')?;
        let body = self.body()?;
        self.expect(')')?;
        Ok(ComponentScheme { tag: Some(tag), body })
    }

    fn body(&mut self) -> Result<ComponentBody, SchemeError> {
        if self.peek() == Some('n') {
            return self.noncontractible().map(ComponentBody::Noncontractible);
        }
        self.forest().map(ComponentBody::Ovals)
    }

    fn noncontractible(&mut self) -> Result<NoncontractibleFamily, SchemeError> {
        self.expect('n')?;
        self.expect('c')?;
        self.expect('(')?;
        let count_pos = self.here();
        let count = self.number()?;
        self.expect(',')?;
        let s = self.number()?;
        self.expect(',')?;
        let t = self.number()?;
        self.expect(')')?;
        let sign = self.sign();
        self.expect('{')?;
        let mut annuli = vec![self.forest()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            annuli.push(self.forest()?);
        }
        self.expect('}')?;
        if count == 0 {
            return Err(SchemeError::Syntax {
                position: count_pos,
                message: "number of noncontractible components must be positive".into(),
            });
        }
        if annuli.len() as u64 != count {
            return Err(SchemeError::Syntax {
                position: count_pos,
                message: format!("nc({count},..) needs {count} annulus slots, found {}", annuli.len()),
            });
        }
        Ok(NoncontractibleFamily { s: to_u32(s, count_pos)?, t: to_u32(t, count_pos)?, sign, annuli })
    }

    fn forest(&mut self) -> Result<Forest, SchemeError> {
        if self.peek() == Some('0') {
            self.pos += 1;
            if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.error("numbers may not have leading zeros"));
            }
            return Ok(Forest::default());
        }
        let mut ovals = Vec::new();
        self.item(&mut ovals)?;
        while self.peek() == Some('u') {
            self.pos += 1;
            self.item(&mut ovals)?;
        }
        Ok(Forest(ovals))
    }

    fn item(&mut self, out: &mut Vec<Oval>) -> Result<(), SchemeError> {
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit() && c != '0') {
            return Err(self.error("expected a positive oval count"));
        }
        let count_pos = self.here();
        let count = self.number()?;
        if count > 10_000 {
            return Err(SchemeError::Syntax { position: count_pos, message: "oval count too large".into() });
        }
        let sign = self.sign();
        let interior = if self.peek() == Some('<') {
            self.pos += 1;
            let inner = self.forest()?;
            self.expect('>')?;
            inner
        } else {
            Forest::default()
        };
        for _ in 0..count {
            out.push(Oval { sign, interior: interior.clone() });
        }
        Ok(())
    }

    fn sign(&mut self) -> Option<Sign> {
        let s = match self.peek() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return None,
        };
        self.pos += 1;
        Some(s)
    }

    fn number(&mut self) -> Result<u64, SchemeError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(c as u8 - b'0')))
                .ok_or_else(|| self.error("number too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }
}

fn to_u32(v: u64, position: usize) -> Result<u32, SchemeError> {
    u32::try_from(v).map_err(|_| SchemeError::Syntax { position, message: "number too large".into() })
}
