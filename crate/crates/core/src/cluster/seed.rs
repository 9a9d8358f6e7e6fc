//! Seeds, y-mutations and vertex relabelings.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::json::{ratfn_from_json, ratfn_to_json};
use crate::exact::{Context, LaurentPoly, Monomial, RationalFn};

pub const N: usize = 6;
const CTX: Context = Context::Cluster;

/// Skew-symmetric 6×6 exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeMatrix(pub [[i32; N]; N]);

impl ExchangeMatrix {
    /// The exchange matrix of the triangulated twice-punctured torus.
    pub fn initial() -> ExchangeMatrix {
        ExchangeMatrix([
            [0, 0, -1, -1, 1, 1],
            [0, 0, 1, 1, -1, -1],
            [1, -1, 0, 0, -1, 1],
            [1, -1, 0, 0, 1, -1],
            [-1, 1, 1, -1, 0, 0],
            [-1, 1, -1, 1, 0, 0],
        ])
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.0[i][j]
    }

    pub fn is_skew(&self) -> bool {
        (0..N).all(|i| (0..N).all(|j| self.0[i][j] == -self.0[j][i]))
    }

    /// Matrix entries after mutation at `k` (0-based).
    pub fn mutate(&self, k: usize) -> ExchangeMatrix {
        let b = &self.0;
        let mut out = *b;
        for i in 0..N {
            for j in 0..N {
                out[i][j] =
                    if i == k || j == k { -b[i][j] } else { b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2 };
            }
        }
        ExchangeMatrix(out)
    }

    /// Swaps rows and columns `i`, `j` (0-based).
    pub fn permute(&self, i: usize, j: usize) -> ExchangeMatrix {
        let mut out = self.0;
        out.swap(i, j);
        for row in out.iter_mut() {
            row.swap(i, j);
        }
        ExchangeMatrix(out)
    }
}

/// Cluster `y`-variables over the `z` context, where `z_i^2` is the initial `y_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Seed {
    pub y: [RationalFn; N],
    pub b: ExchangeMatrix,
}

/// `z_i^e` for the 0-based index `i`.
pub fn z_pow(i: usize, e: i32) -> LaurentPoly {
    LaurentPoly::monomial(CTX, Monomial::var(i, e))
}

fn check_vertex(k: usize) -> Result<usize> {
    if (1..=N).contains(&k) {
        Ok(k - 1)
    } else {
        Err(Error::Unsupported(format!("vertex {k} outside 1..{N}")))
    }
}

impl Seed {
    /// `y_i = z_i^2` with the initial exchange matrix.
    pub fn initial() -> Seed {
        Seed { y: std::array::from_fn(|i| RationalFn::from_poly(z_pow(i, 2))), b: ExchangeMatrix::initial() }
    }

    /// Mutation at vertex `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let k = check_vertex(k)?;
        let one = RationalFn::one(CTX);
        let yk = &self.y[k];
        let yk_inv = yk.inv()?;
        let y = std::array::from_fn(|i| {
            if i == k {
                return yk_inv.clone();
            }
            let bki = self.b.get(k, i);
            let base = if bki >= 0 { &one + &yk_inv } else { &one + yk };
            (&self.y[i] * &base.pow(-bki).expect("nonzero")).reduce_full()
        });
        Ok(Seed { y, b: self.b.mutate(k) })
    }

    /// Relabels vertices `i` and `j` (1-based, distinct).
    pub fn permute(&self, i: usize, j: usize) -> Result<Seed> {
        let (a, b) = (check_vertex(i)?, check_vertex(j)?);
        if a == b {
            return Err(Error::Unsupported(format!("permutation needs distinct vertices, got {i} twice")));
        }
        let mut y = self.y.clone();
        y.swap(a, b);
        Ok(Seed { y, b: self.b.permute(a, b) })
    }

    /// Applies a script step.
    pub fn apply(&self, step: Step) -> Result<Seed> {
        match step {
            Step::Mutate(k) => self.mutate(k),
            Step::Permute(i, j) => self.permute(i, j),
        }
    }

    pub fn run(&self, steps: &[Step]) -> Result<Seed> {
        steps.iter().try_fold(self.clone(), |s, &st| s.apply(st))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "y": self.y.iter().map(ratfn_to_json).collect::<Vec<_>>(),
            "B": self.b.0.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Seed> {
        let bad = |m: &str| Error::Json(m.to_string());
        let ys = v.get("y").and_then(Value::as_array).ok_or_else(|| bad("missing y"))?;
        if ys.len() != N {
            return Err(bad("y must have six entries"));
        }
        let parsed: Vec<RationalFn> = ys.iter().map(|e| ratfn_from_json(CTX, e)).collect::<Result<_>>()?;
        let rows = v.get("B").and_then(Value::as_array).ok_or_else(|| bad("missing B"))?;
        if rows.len() != N {
            return Err(bad("B must be 6x6"));
        }
        let mut b = [[0i32; N]; N];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_array().filter(|r| r.len() == N).ok_or_else(|| bad("B must be 6x6"))?;
            for (j, e) in row.iter().enumerate() {
                b[i][j] = e.as_i64().ok_or_else(|| bad("B entries must be integers"))? as i32;
            }
        }
        let b = ExchangeMatrix(b);
        if !b.is_skew() {
            return Err(bad("B must be skew-symmetric"));
        }
        Ok(Seed { y: parsed.try_into().expect("six entries"), b })
    }
}

/// One step of a mutation script.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Mutate(usize),
    Permute(usize, usize),
}

/// Parses `2,3,s(3,5),1`: vertex indices and `s(i,j)` relabelings, applied
/// left to right.
pub fn parse_script(text: &str) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    let mut pos = 0;
    for raw in split_top(text) {
        let item = raw.trim();
        let at = pos + raw.len() - raw.trim_start().len();
        pos += raw.len() + 1;
        if item.is_empty() {
            return Err(Error::parse(at, "empty item"));
        }
        let num = |s: &str, off: usize| -> Result<usize> {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(at + off, format!("expected a vertex index, found '{}'", s.trim())))
        };
        if let Some(inner) = item.strip_prefix("s(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner.split_once(',').ok_or_else(|| Error::parse(at, "permutation needs two indices"))?;
            let (i, j) = (num(a, 2)?, num(b, 3 + a.len())?);
            check_vertex(i)?;
            check_vertex(j)?;
            if i == j {
                return Err(Error::parse(at, "permutation needs distinct indices"));
            }
            steps.push(Step::Permute(i, j));
        } else {
            let k = num(item, 0)?;
            check_vertex(k).map_err(|_| Error::parse(at, format!("vertex {k} outside 1..{N}")))?;
            steps.push(Step::Mutate(k));
        }
    }
    Ok(steps)
}

/// Splits on commas outside parentheses.
fn split_top(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// Mutations and relabeling realizing the classical twist `a`:
/// `μ_i μ_j μ_i` followed by `σ`.
pub fn dehn_cl_steps(a: u8) -> Result<[Step; 4]> {
    use Step::*;
    Ok(match a {
        1 => [Mutate(2), Mutate(3), Mutate(2), Permute(3, 5)],
        2 => [Mutate(1), Mutate(6), Mutate(1), Permute(3, 6)],
        3 => [Mutate(2), Mutate(4), Mutate(2), Permute(4, 6)],
        _ => return Err(Error::Unsupported(format!("no classical twist {a}"))),
    })
}

/// Seed map of the classical twist `a`.
pub fn dehn_cl(a: u8, s: &Seed) -> Result<Seed> {
    s.run(&dehn_cl_steps(a)?)
}
