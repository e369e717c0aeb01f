//! Semigroup identities between words whose variables may carry `ω+k`
//! exponents, e.g. `xyz = xz`, `x^(w+1) = x` or `x^w y x^w = x^w`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::semigroup::{Element, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("expected exactly one '=' in {0:?}")]
    MissingEquals(String),
    #[error("empty side in {0:?}")]
    EmptySide(String),
    #[error("unexpected character {found:?} at offset {at}")]
    Unexpected { found: char, at: usize },
    #[error("malformed exponent at offset {0}")]
    BadExponent(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exponent {
    /// A positive integer power.
    Power(usize),
    /// `ω + k`.
    Omega(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub var: usize,
    pub exponent: Exponent,
}

/// A parsed identity `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    variables: Vec<char>,
    lhs: Vec<Factor>,
    rhs: Vec<Factor>,
}

/// An assignment on which the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityWitness {
    pub assignment: Vec<(char, Element)>,
    pub lhs_value: Element,
    pub rhs_value: Element,
}

impl Identity {
    pub fn parse(text: &str) -> Result<Self, IdentityError> {
        let parts: Vec<&str> = text.split('=').collect();
        if parts.len() != 2 {
            return Err(IdentityError::MissingEquals(text.to_string()));
        }
        let mut variables = Vec::new();
        let lhs = parse_side(parts[0], 0, &mut variables)?;
        let rhs = parse_side(parts[1], parts[0].len() + 1, &mut variables)?;
        if lhs.is_empty() || rhs.is_empty() {
            return Err(IdentityError::EmptySide(text.to_string()));
        }
        Ok(Self { variables, lhs, rhs })
    }

    pub fn variables(&self) -> &[char] {
        &self.variables
    }

    fn eval_side(s: &FiniteSemigroup, side: &[Factor], values: &[Element]) -> Element {
        side.iter()
            .map(|f| {
                let x = values[f.var];
                match f.exponent {
                    Exponent::Power(k) => s.power(x, k),
                    Exponent::Omega(k) => s.omega_power(x, k),
                }
            })
            .reduce(|a, b| s.mul(a, b))
            .expect("sides are nonempty")
    }

    /// Evaluates both sides under `values` (indexed like [`Self::variables`]).
    pub fn evaluate(&self, s: &FiniteSemigroup, values: &[Element]) -> (Element, Element) {
        (Self::eval_side(s, &self.lhs, values), Self::eval_side(s, &self.rhs, values))
    }

    /// First failing assignment with variables ranging over `domain`, in
    /// lexicographic order of the assignment.
    pub fn counterexample_on(&self, s: &FiniteSemigroup, domain: &[Element]) -> Option<IdentityWitness> {
        let v = self.variables.len();
        if domain.is_empty() {
            return None;
        }
        let mut idx = vec![0usize; v];
        loop {
            let values: Vec<Element> = idx.iter().map(|&i| domain[i]).collect();
            let (l, r) = self.evaluate(s, &values);
            if l != r {
                return Some(IdentityWitness {
                    assignment: self.variables.iter().copied().zip(values).collect(),
                    lhs_value: l,
                    rhs_value: r,
                });
            }
            // odometer, last variable fastest
            let mut pos = v;
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < domain.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    pub fn counterexample(&self, s: &FiniteSemigroup) -> Option<IdentityWitness> {
        let all: Vec<Element> = s.elements().collect();
        self.counterexample_on(s, &all)
    }
}

/// `true` iff `s` satisfies the identity; see [`Identity::counterexample`]
/// for a witness.
pub fn satisfies_identity(s: &FiniteSemigroup, identity: &Identity) -> bool {
    identity.counterexample(s).is_none()
}

impl FromStr for Identity {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::parse(s)
    }
}

fn parse_side(text: &str, base: usize, vars: &mut Vec<char>) -> Result<Vec<Factor>, IdentityError> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        if !c.is_ascii_lowercase() || c == 'w' {
            return Err(IdentityError::Unexpected { found: c, at: base + at });
        }
        let var = match vars.iter().position(|&v| v == c) {
            Some(p) => p,
            None => {
                vars.push(c);
                vars.len() - 1
            }
        };
        i += 1;
        let mut exponent = Exponent::Power(1);
        if i < chars.len() && chars[i].1 == '^' {
            let start = chars[i].0;
            i += 1;
            let (open, close) = match chars.get(i).map(|p| p.1) {
                Some('(') => ('(', ')'),
                Some('{') => ('{', '}'),
                _ => (' ', ' '),
            };
            let mut body = String::new();
            if open != ' ' {
                i += 1;
                while i < chars.len() && chars[i].1 != close {
                    body.push(chars[i].1);
                    i += 1;
                }
                if i == chars.len() {
                    return Err(IdentityError::BadExponent(base + start));
                }
                i += 1;
            } else {
                while i < chars.len() && (chars[i].1.is_ascii_digit() || matches!(chars[i].1, 'w' | 'ω')) {
                    body.push(chars[i].1);
                    i += 1;
                    if matches!(body.as_str(), "w" | "ω") {
                        break;
                    }
                }
            }
            exponent = parse_exponent(&body).ok_or(IdentityError::BadExponent(base + start))?;
        }
        out.push(Factor { var, exponent });
    }
    Ok(out)
}

fn parse_exponent(body: &str) -> Option<Exponent> {
    let body = body.replace('ω', "w");
    if let Some(rest) = body.strip_prefix('w') {
        if rest.is_empty() {
            return Some(Exponent::Omega(0));
        }
        let (sign, digits) = rest.split_at(1);
        let k: i64 = digits.parse().ok()?;
        return match sign {
            "+" => Some(Exponent::Omega(k)),
            "-" => Some(Exponent::Omega(-k)),
            _ => None,
        };
    }
    let k: usize = body.parse().ok()?;
    (k >= 1).then_some(Exponent::Power(k))
}

fn fmt_side(f: &mut fmt::Formatter<'_>, side: &[Factor], vars: &[char]) -> fmt::Result {
    for factor in side {
        write!(f, "{}", vars[factor.var])?;
        match factor.exponent {
            Exponent::Power(1) => {}
            Exponent::Power(k) => write!(f, "^{k}")?,
            Exponent::Omega(0) => write!(f, "^w")?,
            Exponent::Omega(k) if k > 0 => write!(f, "^(w+{k})")?,
            Exponent::Omega(k) => write!(f, "^(w-{})", -k)?,
        }
    }
    Ok(())
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_side(f, &self.lhs, &self.variables)?;
        f.write_str(" = ")?;
        fmt_side(f, &self.rhs, &self.variables)
    }
}
