//! Text forms of [`MPoly`].
//!
//! * JSON: `{"terms":[{"exp":[dx,da,db],"num":"..","den":".."}]}` with terms
//!   sorted by exponent triple, descending.
//! * Human: `x^2 + 2*a*x + a^2 - a`. `α` prints as `a` and `β` as `b`;
//!   parameters come before `x` inside a term.
//! * LaTeX: `x^{2} + 2 \alpha x + \alpha^{2} - \alpha`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{BigRational, Exponent, MPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse polynomial: {0}")]
pub struct ParsePolyError(String);

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: Exponent,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        JsonPoly {
            terms: self
                .terms()
                .rev()
                .map(|(e, c)| JsonTerm {
                    exp: *e,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let num: BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((t.exp, BigRational::new(num, den)));
        }
        Ok(MPoly::from_terms(terms))
    }
}

const HUMAN_NAMES: [&str; 3] = ["x", "a", "b"];
const LATEX_NAMES: [&str; 3] = ["x", "\\alpha", "\\beta"];
/// Factor order inside a term: α, β, then x.
const FACTOR_ORDER: [usize; 3] = [1, 2, 0];

fn human_monomial(e: &Exponent) -> String {
    FACTOR_ORDER
        .iter()
        .filter(|&&v| e[v] > 0)
        .map(|&v| match e[v] {
            1 => HUMAN_NAMES[v].to_string(),
            k => format!("{}^{k}", HUMAN_NAMES[v]),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn latex_monomial(e: &Exponent) -> String {
    FACTOR_ORDER
        .iter()
        .filter(|&&v| e[v] > 0)
        .map(|&v| match e[v] {
            1 => LATEX_NAMES[v].to_string(),
            k => format!("{}^{{{k}}}", LATEX_NAMES[v]),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn latex_coeff(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Joins signed terms as `t1 + t2 - t3`.
fn join_terms<F>(p: &MPoly, mut render: F) -> String
where
    F: FnMut(&Exponent, &BigRational) -> String,
{
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        let body = render(e, &c.abs());
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(self, |e, c| {
            let mono = human_monomial(e);
            if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else {
                format!("{c}*{mono}")
            }
        });
        f.write_str(&s)
    }
}

impl MPoly {
    pub fn to_latex(&self) -> String {
        join_terms(self, |e, c| {
            let mono = latex_monomial(e);
            if mono.is_empty() {
                latex_coeff(c)
            } else if c.is_one() {
                mono
            } else {
                format!("{} {mono}", latex_coeff(c))
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial JSON serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, ParsePolyError> {
        serde_json::from_str(text).map_err(|e| ParsePolyError(e.to_string()))
    }
}

fn parse_factor(tok: &str, exp: &mut Exponent, coeff: &mut BigRational) -> Result<(), ParsePolyError> {
    let bad = || ParsePolyError(format!("bad factor {tok:?}"));
    let (base, power) = match tok.split_once('^') {
        Some((b, p)) => (b, p.parse::<u32>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    let var = match base {
        "x" => Some(0),
        "a" | "α" => Some(1),
        "b" | "β" => Some(2),
        _ => None,
    };
    match var {
        Some(v) => exp[v] += power,
        None => {
            if tok.contains('^') {
                return Err(bad());
            }
            let c = super::linear::rational_str::parse(base).ok_or_else(bad)?;
            *coeff = &*coeff * &c;
        }
    }
    Ok(())
}

impl FromStr for MPoly {
    type Err = ParsePolyError;

    /// Parses the human form produced by `Display`. Factors inside a term
    /// may come in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParsePolyError("empty input".into()));
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut sign_positive = true;
        let mut chars = compact.chars().peekable();
        let mut flush = |body: &str, positive: bool| -> Result<(), ParsePolyError> {
            if body.is_empty() {
                return Err(ParsePolyError(format!("empty term in {s:?}")));
            }
            let mut exp = [0; 3];
            let mut coeff = BigRational::one();
            for tok in body.split('*') {
                parse_factor(tok, &mut exp, &mut coeff)?;
            }
            if !positive {
                coeff = -coeff;
            }
            terms.push((exp, coeff));
            Ok(())
        };
        if let Some(&c) = chars.peek() {
            if c == '-' || c == '+' {
                sign_positive = c == '+';
                chars.next();
            }
        }
        for c in chars {
            if (c == '+' || c == '-') && !current.ends_with('^') && !current.ends_with('*') {
                flush(&current, sign_positive)?;
                current.clear();
                sign_positive = c == '+';
            } else {
                current.push(c);
            }
        }
        flush(&current, sign_positive)?;
        Ok(MPoly::from_terms(terms))
    }
}
