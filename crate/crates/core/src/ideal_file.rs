//! The plain-text ideal format:
//!
//! ```text
//! # the twisted cubic
//! name: twisted cubic
//! vars: x y z
//! p: y - x^2
//! p: z - x^3
//! expect.degree: 3
//! ```
//!
//! `#` starts a comment, blank lines are ignored, `vars:` must come before
//! the first `p:` line.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{parse_in, vars, MonomialOrder, Polynomial, Vars};

#[derive(Clone, Debug, PartialEq)]
pub struct IdealFile {
    pub name: Option<String>,
    pub vars: Vec<String>,
    /// Generator sources as written.
    pub polys: Vec<String>,
    /// `expect.<key>: <value>` entries, for test corpora.
    pub expected: BTreeMap<String, String>,
}

impl IdealFile {
    pub fn new<S: AsRef<str>, T: AsRef<str>>(names: &[S], polys: &[T]) -> Self {
        IdealFile {
            name: None,
            vars: names.iter().map(|s| s.as_ref().to_string()).collect(),
            polys: polys.iter().map(|s| s.as_ref().to_string()).collect(),
            expected: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut file = IdealFile { name: None, vars: Vec::new(), polys: Vec::new(), expected: BTreeMap::new() };
        let mut context: Option<Vars> = None;
        let mut last_line = 0;
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            last_line = line;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let err = |column: usize, message: String| Error::Input { line, column, message };
            let Some(colon) = content.find(':') else {
                let column = content.len() - content.trim_start().len() + 1;
                return Err(err(column, "expected `key: value`".into()));
            };
            let key = content[..colon].trim();
            let value = &content[colon + 1..];
            let value_column = colon + 2 + (value.len() - value.trim_start().len());
            let value = value.trim_start();
            match key {
                "vars" => {
                    if context.is_some() {
                        return Err(err(1, "duplicate `vars:` line".into()));
                    }
                    let names: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                    if names.is_empty() {
                        return Err(err(value_column, "no variables declared".into()));
                    }
                    for (i, name) in names.iter().enumerate() {
                        let valid = name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                            && name.chars().all(|c| c.is_alphanumeric() || c == '_');
                        if !valid {
                            return Err(err(value_column, format!("invalid variable name `{name}`")));
                        }
                        if names[..i].contains(name) {
                            return Err(err(value_column, format!("variable `{name}` declared twice")));
                        }
                    }
                    context = Some(vars(&names));
                    file.vars = names;
                }
                "p" => {
                    let Some(vs) = &context else {
                        return Err(err(1, "`p:` line before `vars:`".into()));
                    };
                    parse_in(value, vs, MonomialOrder::GrevLex).map_err(|e| {
                        let (position, message) = match e {
                            Error::Syntax { position, message } => (position, message),
                            Error::UnknownVariable { name, position } => {
                                (position, format!("unknown variable `{name}`"))
                            }
                            Error::ZeroDenominator { position } => (position, "zero denominator".into()),
                            other => (0, other.to_string()),
                        };
                        let column = value_column + value[..position.min(value.len())].chars().count();
                        err(column, message)
                    })?;
                    file.polys.push(value.trim_end().to_string());
                }
                "name" => file.name = Some(value.trim_end().to_string()),
                k if k.starts_with("expect.") && k.len() > "expect.".len() => {
                    file.expected.insert(k["expect.".len()..].to_string(), value.trim_end().to_string());
                }
                other => return Err(err(1, format!("unknown key `{other}`"))),
            }
        }
        let end = |message: &str| Error::Input { line: last_line.max(1), column: 1, message: message.into() };
        if file.vars.is_empty() {
            return Err(end("missing `vars:` line"));
        }
        if file.polys.is_empty() {
            return Err(end("no `p:` lines"));
        }
        Ok(file)
    }

    pub fn polynomials(&self) -> Result<Vec<Polynomial>> {
        let vs = vars(&self.vars);
        self.polys.iter().map(|p| parse_in(p, &vs, MonomialOrder::GrevLex)).collect()
    }

    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::new(&vars(&self.vars), self.polynomials()?)
    }

    /// Typed lookup of an `expect.` entry.
    pub fn expected<T: FromStr>(&self, key: &str) -> Option<T> {
        self.expected.get(key).and_then(|v| v.parse().ok())
    }
}

impl FromStr for IdealFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdealFile::parse(s)
    }
}

impl fmt::Display for IdealFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name: {name}")?;
        }
        writeln!(f, "vars: {}", self.vars.join(" "))?;
        for p in &self.polys {
            writeln!(f, "p: {p}")?;
        }
        for (k, v) in &self.expected {
            writeln!(f, "expect.{k}: {v}")?;
        }
        Ok(())
    }
}
