//! A small reader and writer for the Prolog-style fact syntax used by the
//! frame, annotation and lvp files.

use std::fmt;

use thiserror::Error;

/// A parsed Prolog term. Only the shapes that appear in the data files are
/// supported: atoms, integers, lists and compound terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Atom(String),
    Int(i64),
    List(Vec<Term>),
    Compound(String, Vec<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct TermError {
    pub line: usize,
    pub message: String,
}

impl Term {
    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Term::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Term::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Term]> {
        match self {
            Term::List(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_compound(&self, name: &str, arity: usize) -> Option<&[Term]> {
        match self {
            Term::Compound(n, args) if n == name && args.len() == arity => Some(args),
            _ => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Atom(a) => f.write_str(&quote_atom(a)),
            Term::Int(i) => write!(f, "{i}"),
            Term::List(items) => {
                f.write_str("[")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str("]")
            }
            Term::Compound(name, args) => {
                write!(f, "{}(", quote_atom(name))?;
                for (i, arg) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{arg}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// True when `s` can be written as an unquoted Prolog atom.
pub fn is_plain_atom(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Writes `s` as an atom, quoting it when needed.
pub fn quote_atom(s: &str) -> String {
    if is_plain_atom(s) {
        s.to_string()
    } else {
        quote(s)
    }
}

/// Always single-quotes `s`, escaping quotes and backslashes.
pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('\'');
    for c in s.chars() {
        match c {
            '\'' => out.push_str("\\'"),
            '\\' => out.push_str("\\\\"),
            _ => out.push(c),
        }
    }
    out.push('\'');
    out
}

struct Reader<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _src: &'a str,
}

impl<'a> Reader<'a> {
    fn new(src: &'a str) -> Self {
        Reader {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            _src: src,
        }
    }

    fn err(&self, message: impl Into<String>) -> TermError {
        TermError {
            line: self.line,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '%' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<(), TermError> {
        self.skip_ws();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn term(&mut self) -> Result<Term, TermError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('[') => {
                self.bump();
                let items = self.args(']')?;
                Ok(Term::List(items))
            }
            Some('\'') => {
                let name = self.quoted()?;
                self.maybe_compound(name)
            }
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let mut s = String::new();
                s.push(self.bump().unwrap_or('-'));
                while let Some(c) = self.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                s.parse()
                    .map(Term::Int)
                    .map_err(|_| self.err(format!("bad integer '{s}'")))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(c) = self.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        s.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                self.maybe_compound(s)
            }
            Some(c) => Err(self.err(format!("unexpected character '{c}'"))),
        }
    }

    fn maybe_compound(&mut self, name: String) -> Result<Term, TermError> {
        if self.peek() == Some('(') {
            self.bump();
            let args = self.args(')')?;
            Ok(Term::Compound(name, args))
        } else {
            Ok(Term::Atom(name))
        }
    }

    fn args(&mut self, close: char) -> Result<Vec<Term>, TermError> {
        let mut items = Vec::new();
        self.skip_ws();
        if self.peek() == Some(close) {
            self.bump();
            return Ok(items);
        }
        loop {
            items.push(self.term()?);
            self.skip_ws();
            match self.bump() {
                Some(',') => continue,
                Some(c) if c == close => return Ok(items),
                Some(c) => return Err(self.err(format!("expected ',' or '{close}', found '{c}'"))),
                None => return Err(self.err(format!("unclosed '{close}'"))),
            }
        }
    }

    fn quoted(&mut self) -> Result<String, TermError> {
        self.bump();
        let mut s = String::new();
        loop {
            match self.bump() {
                None => return Err(self.err("unterminated quoted atom")),
                Some('\\') => match self.bump() {
                    Some(c) => s.push(c),
                    None => return Err(self.err("unterminated quoted atom")),
                },
                Some('\'') => {
                    if self.peek() == Some('\'') {
                        self.bump();
                        s.push('\'');
                    } else {
                        return Ok(s);
                    }
                }
                Some(c) => s.push(c),
            }
        }
    }
}

/// Parses a single term with no trailing period.
pub fn parse_term(src: &str) -> Result<Term, TermError> {
    let mut r = Reader::new(src);
    let t = r.term()?;
    r.skip_ws();
    if r.peek() == Some('.') {
        r.bump();
        r.skip_ws();
    }
    if r.peek().is_some() {
        return Err(r.err("trailing input after term"));
    }
    Ok(t)
}

/// Parses a sequence of `term.` clauses. Each clause is returned with the
/// line number it starts on. `%` starts a line comment.
pub fn parse_clauses(src: &str) -> Result<Vec<(usize, Term)>, TermError> {
    let mut r = Reader::new(src);
    let mut out = Vec::new();
    loop {
        r.skip_ws();
        if r.peek().is_none() {
            return Ok(out);
        }
        let line = r.line;
        let t = r.term()?;
        r.expect('.')?;
        out.push((line, t));
    }
}
