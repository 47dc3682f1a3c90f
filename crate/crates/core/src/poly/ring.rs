use std::collections::HashSet;

use super::{parse, Mono, Poly};
use crate::arith::Cyclo;
use crate::error::{Error, Result};

/// Ordered variable names, plus optional aliases accepted by the parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    aliases: Vec<(String, usize)>,
}

fn valid_ident(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "zeta"
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for n in &names {
            if !valid_ident(n) {
                return Err(Error::Input(format!("invalid variable name `{n}`")));
            }
            if !seen.insert(n.clone()) {
                return Err(Error::Input(format!("duplicate variable `{n}`")));
            }
        }
        Ok(PolyRing {
            names,
            aliases: Vec::new(),
        })
    }

    pub fn with_alias(mut self, alias: &str, index: usize) -> Result<Self> {
        if !valid_ident(alias) || self.index_of(alias).is_some() {
            return Err(Error::Input(format!(
                "alias `{alias}` clashes or is invalid"
            )));
        }
        self.aliases.push((alias.to_string(), index));
        Ok(self)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn aliases(&self) -> &[(String, usize)] {
        &self.aliases
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).or_else(|| {
            self.aliases
                .iter()
                .find(|(a, _)| a == name)
                .map(|(_, i)| *i)
        })
    }

    pub fn var(&self, name: &str) -> Result<Poly> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Poly::var(self.nvars(), i))
    }

    pub fn parse(&self, src: &str) -> Result<Poly> {
        parse::parse(src, self)
    }

    pub fn fmt_mono(&self, m: &Mono) -> String {
        let parts: Vec<String> =
            m.0.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.names[i].clone()
                    } else {
                        format!("{}^{}", self.names[i], e)
                    }
                })
                .collect();
        parts.join("*")
    }

    /// Parseable text, terms in decreasing grlex order.
    pub fn fmt(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (m, c) in p.terms().rev() {
            let (neg, body) = coeff_body(c);
            let mono = self.fmt_mono(m);
            let term = if mono.is_empty() {
                body
            } else if body == "1" {
                mono
            } else {
                format!("{body}*{mono}")
            };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
                s.push_str(&term);
            } else {
                s.push_str(if neg { " - " } else { " + " });
                s.push_str(&term);
            }
        }
        s
    }

    pub fn fmt_linear(&self, l: &[Cyclo]) -> String {
        self.fmt(&Poly::from_linear_form(l))
    }
}

/// Sign and printable body of a coefficient; compound values are
/// parenthesized.
pub(crate) fn coeff_body(c: &Cyclo) -> (bool, String) {
    let lit = c.to_string();
    if c.is_single_term() {
        match lit.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, lit),
        }
    } else {
        (false, format!("({lit})"))
    }
}
