//! Plain-text description files for graded rings and fans.
//!
//! Both formats are line-oriented `key = value` documents. Values are a
//! single integer or a bracketed integer array; `#` starts a comment.
//!
//! A ring file gives the grading group and one degree per variable; the
//! degree array lists the free coordinates first, then one residue per
//! torsion invariant:
//!
//! ```text
//! rank = 2
//! torsion = []
//! var x = [1, 0]
//! var y = [1, 0]
//! var z = [1, 1]
//! var w = [0, 1]
//! ```
//!
//! A fan file gives the lattice dimension, the rays, and the maximal cones
//! as ray index sets:
//!
//! ```text
//! dim = 2
//! ray = [1, 0]
//! ray = [0, 1]
//! ray = [-1, -1]
//! ray = [1, 1]
//! cone = [0, 3]
//! cone = [1, 3]
//! cone = [1, 2]
//! cone = [0, 2]
//! ```

use std::fmt;

use num_bigint::BigInt;
use secfan_core::gitfan::Fan;
use secfan_core::{DegreeMatrix, DegreeVector, FgAbelianGroup};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Debug, Clone)]
enum Value {
    Int(BigInt),
    Array(Vec<BigInt>),
}

fn parse_value(line_no: usize, text: &str) -> Result<Value, ParseError> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('[') {
        let Some(inner) = inner.strip_suffix(']') else {
            return Err(ParseError::new(line_no, "unterminated array"));
        };
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Value::Array(Vec::new()));
        }
        let mut out = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            let n: BigInt = part
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("expected integer, got `{part}`")))?;
            out.push(n);
        }
        Ok(Value::Array(out))
    } else {
        let n: BigInt = text
            .parse()
            .map_err(|_| ParseError::new(line_no, format!("expected integer, got `{text}`")))?;
        Ok(Value::Int(n))
    }
}

/// `key = value` lines with comments stripped, keyed by whitespace tokens.
fn parse_lines(text: &str) -> Result<Vec<(usize, Vec<String>, Value)>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let Some(eq) = line.find('=') else {
            return Err(ParseError::new(line_no, "expected `key = value`"));
        };
        let key: Vec<String> = line[..eq].split_whitespace().map(String::from).collect();
        if key.is_empty() {
            return Err(ParseError::new(line_no, "missing key before `=`"));
        }
        let value = parse_value(line_no, &line[eq + 1..])?;
        out.push((line_no, key, value));
    }
    Ok(out)
}

fn as_usize(line: usize, v: &Value, what: &str) -> Result<usize, ParseError> {
    match v {
        Value::Int(n) => {
            let (sign, digits) = n.to_u64_digits();
            if sign == num_bigint::Sign::Minus || digits.len() > 1 {
                return Err(ParseError::new(line, format!("{what} out of range")));
            }
            Ok(digits.first().copied().unwrap_or(0) as usize)
        }
        Value::Array(_) => Err(ParseError::new(line, format!("{what} must be an integer"))),
    }
}

#[derive(Debug, Clone)]
pub struct RingSpec {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
    pub vars: Vec<(String, Vec<BigInt>)>,
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, ParseError> {
    let mut rank: Option<(usize, usize)> = None;
    let mut torsion: Option<(usize, Vec<BigInt>)> = None;
    let mut vars: Vec<(usize, String, Vec<BigInt>)> = Vec::new();
    for (line, key, value) in parse_lines(text)? {
        match key[0].as_str() {
            "rank" => {
                if rank.is_some() {
                    return Err(ParseError::new(line, "duplicate `rank`"));
                }
                rank = Some((line, as_usize(line, &value, "rank")?));
            }
            "torsion" => {
                if torsion.is_some() {
                    return Err(ParseError::new(line, "duplicate `torsion`"));
                }
                match value {
                    Value::Array(a) => torsion = Some((line, a)),
                    Value::Int(_) => {
                        return Err(ParseError::new(line, "`torsion` must be an array"))
                    }
                }
            }
            "var" => {
                let Some(name) = key.get(1) else {
                    return Err(ParseError::new(line, "`var` needs a name: `var x = [...]`"));
                };
                if key.len() > 2 {
                    return Err(ParseError::new(line, "too many tokens in `var` key"));
                }
                if vars.iter().any(|(_, n, _)| n == name) {
                    return Err(ParseError::new(line, format!("duplicate variable `{name}`")));
                }
                match value {
                    Value::Array(a) => vars.push((line, name.clone(), a)),
                    Value::Int(n) => vars.push((line, name.clone(), vec![n])),
                }
            }
            other => {
                return Err(ParseError::new(line, format!("unknown key `{other}`")));
            }
        }
    }
    let Some((_, rank)) = rank else {
        return Err(ParseError::new(0, "missing `rank`"));
    };
    let torsion = torsion.map(|(_, t)| t).unwrap_or_default();
    if vars.is_empty() {
        return Err(ParseError::new(0, "no variables declared"));
    }
    let want = rank + torsion.len();
    for (line, name, degree) in &vars {
        if degree.len() != want {
            return Err(ParseError::new(
                *line,
                format!(
                    "degree of `{name}` has {} entries, expected {want} \
                     ({rank} free + {} torsion)",
                    degree.len(),
                    torsion.len()
                ),
            ));
        }
    }
    Ok(RingSpec {
        rank,
        torsion,
        vars: vars.into_iter().map(|(_, n, d)| (n, d)).collect(),
    })
}

impl RingSpec {
    pub fn to_degree_matrix(&self) -> Result<DegreeMatrix, secfan_core::Error> {
        let group = FgAbelianGroup::new(self.rank, self.torsion.clone())?;
        let mut names = Vec::with_capacity(self.vars.len());
        let mut degrees = Vec::with_capacity(self.vars.len());
        for (name, entries) in &self.vars {
            names.push(name.clone());
            let free = entries[..self.rank].to_vec();
            let tors = entries[self.rank..].to_vec();
            degrees.push(DegreeVector::new(&group, free, tors)?);
        }
        DegreeMatrix::new(group, names, degrees)
    }
}

#[derive(Debug, Clone)]
pub struct FanSpec {
    pub dim: usize,
    pub rays: Vec<Vec<BigInt>>,
    pub cones: Vec<Vec<usize>>,
}

pub fn parse_fan_spec(text: &str) -> Result<FanSpec, ParseError> {
    let mut dim: Option<usize> = None;
    let mut rays: Vec<(usize, Vec<BigInt>)> = Vec::new();
    let mut cones: Vec<Vec<usize>> = Vec::new();
    for (line, key, value) in parse_lines(text)? {
        match key[0].as_str() {
            "dim" => {
                if dim.is_some() {
                    return Err(ParseError::new(line, "duplicate `dim`"));
                }
                dim = Some(as_usize(line, &value, "dim")?);
            }
            "ray" => match value {
                Value::Array(a) => rays.push((line, a)),
                Value::Int(n) => rays.push((line, vec![n])),
            },
            "cone" => {
                let entries = match value {
                    Value::Array(a) => a,
                    Value::Int(n) => vec![n],
                };
                let mut idx = Vec::with_capacity(entries.len());
                for e in entries {
                    let v = as_usize(line, &Value::Int(e), "ray index")?;
                    idx.push(v);
                }
                cones.push(idx);
            }
            other => {
                return Err(ParseError::new(line, format!("unknown key `{other}`")));
            }
        }
    }
    let Some(dim) = dim else {
        return Err(ParseError::new(0, "missing `dim`"));
    };
    for (line, r) in &rays {
        if r.len() != dim {
            return Err(ParseError::new(
                *line,
                format!("ray has {} entries, expected {dim}", r.len()),
            ));
        }
    }
    if rays.is_empty() {
        return Err(ParseError::new(0, "no rays declared"));
    }
    Ok(FanSpec {
        dim,
        rays: rays.into_iter().map(|(_, r)| r).collect(),
        cones,
    })
}

impl FanSpec {
    pub fn to_fan(&self) -> Result<Fan, secfan_core::Error> {
        Fan::new(self.dim, self.rays.clone(), self.cones.clone())
    }
}
