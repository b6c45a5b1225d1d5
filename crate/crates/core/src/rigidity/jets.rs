//! Jet-level rigidity: truncate an unknown holomorphic `H` to finitely many
//! Taylor coefficients, impose a matrix relation on a variety through the
//! origin, and read off which values `H(0)` survive.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::linalg::{det, nullspace, rref};
use crate::algebra::{GaussianRational, Matrix, PolyMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// `A H = H B`
    AHeqHB,
    /// `H A = B H`
    HAeqBH,
    /// `A H = H A`
    AHeqHA,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::AHeqHB, Relation::HAeqBH, Relation::AHeqHA];
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::AHeqHB => "AHeqHB",
            Relation::HAeqBH => "HAeqBH",
            Relation::AHeqHA => "AHeqHA",
        })
    }
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.to_string() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown relation `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Variety {
    FullPlane,
    /// `z = t^q`, `w = t^p`, i.e. the curve `z^p = w^q`.
    Cusp { p: u32, q: u32 },
    /// The lines `w = t_j z`.
    Lines { slopes: Vec<GaussianRational> },
}

impl Variety {
    /// The smallest truncation at which the coefficient comparisons behind
    /// the rigidity statements for the family with parameter `ell` exist.
    pub fn default_order(&self, ell: u32) -> u32 {
        match self {
            Variety::FullPlane | Variety::Lines { .. } => 2 * ell + 4,
            Variety::Cusp { p, q } => (ell + 3) * (p + q),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Variety::FullPlane => Ok(()),
            Variety::Cusp { p, q } => {
                if *p == 0 || *q == 0 || num::integer::gcd(*p, *q) != 1 {
                    Err(Error::NotCoprime { p: *p, q: *q })
                } else {
                    Ok(())
                }
            }
            Variety::Lines { slopes } => {
                if slopes.is_empty() {
                    return Err(Error::Invalid("at least one line is needed".into()));
                }
                for (i, t) in slopes.iter().enumerate() {
                    if slopes[i + 1..].contains(t) {
                        return Err(Error::RepeatedSlope);
                    }
                }
                Ok(())
            }
        }
    }

    /// Weight of `z^j w^k` after restriction: the power of the curve
    /// parameter it turns into.
    fn weight(&self, j: u32, k: u32) -> u32 {
        match self {
            Variety::Cusp { p, q } => j * q + k * p,
            _ => j + k,
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variety::FullPlane => f.write_str("full"),
            Variety::Cusp { p, q } => write!(f, "cusp:{p},{q}"),
            Variety::Lines { slopes } => {
                let s: Vec<String> = slopes.iter().map(|t| t.to_string()).collect();
                write!(f, "lines:{}", s.join(","))
            }
        }
    }
}

impl FromStr for Variety {
    type Err = Error;
    /// `full`, `cusp:P,Q` or `lines:t1,t2,...`
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown variety `{s}`"));
        let v = match s.split_once(':') {
            None if s == "full" => Variety::FullPlane,
            Some(("cusp", rest)) => {
                let (p, q) = rest.split_once(',').ok_or_else(bad)?;
                Variety::Cusp {
                    p: p.trim().parse().map_err(|_| bad())?,
                    q: q.trim().parse().map_err(|_| bad())?,
                }
            }
            Some(("lines", rest)) => Variety::Lines {
                slopes: rest.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?,
            },
            _ => return Err(bad()),
        };
        v.validate()?;
        Ok(v)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct JetRigidityResult {
    pub variety: Variety,
    pub relation: Relation,
    pub order: u32,
    pub unknowns: usize,
    pub equations: usize,
    /// Basis (in reduced echelon form) of the admissible values of `H(0)`,
    /// each listed row by row.
    pub solution_space: Vec<Vec<GaussianRational>>,
    pub forces_zero: bool,
    pub scalar_line: bool,
    /// An admissible invertible `H(0)`, when one exists.
    pub invertible_witness: Option<Vec<GaussianRational>>,
}

/// An unknown Taylor coefficient: entry `(row, col)` of `H`, monomial
/// `z^j w^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Unknown {
    degree: u32,
    // Graded-lex inside one degree: larger z exponent first.
    neg_j: i64,
    entry: usize,
    j: u32,
    k: u32,
}

/// Equation label: entry of the relation, line index (0 unless lines),
/// and the retained monomial.
type EqKey = (usize, usize, u32, u32);

/// Solves the truncated relation on the variety and projects the solution
/// space to `H(0)`.
///
/// Only relation monomials of weight at most `order` are compared, and every
/// Taylor coefficient of `H` that can reach them is an unknown, so each
/// retained equation is complete. The projection therefore contains `H(0)`
/// for every holomorphic solution, and can only shrink as `order` grows.
pub fn jet_rigidity(
    a: &PolyMatrix,
    b: &PolyMatrix,
    relation: Relation,
    variety: &Variety,
    order: u32,
) -> Result<JetRigidityResult> {
    variety.validate()?;
    if order == 0 {
        return Err(Error::Invalid("order must be at least 1".into()));
    }
    if a.vars().len() != 2 || a.vars() != b.vars() {
        return Err(Error::Invalid("jet rigidity needs A and B in the same two variables".into()));
    }
    let n = a.rows();
    if !a.is_square() || b.rows() != n || b.cols() != n {
        return Err(Error::Size("A and B must be square of one size".into()));
    }
    // L(H) = X H − H Y
    let (x, y) = match relation {
        Relation::AHeqHB => (a, b),
        Relation::HAeqBH => (b, a),
        Relation::AHeqHA => (a, a),
    };

    let min_weight = x
        .entries()
        .chain(y.entries())
        .flat_map(|p| p.terms().map(|(m, _)| variety.weight(m.exps()[0], m.exps()[1])))
        .min()
        .unwrap_or(0);
    let budget = order.saturating_sub(min_weight);
    let mut unknowns = Vec::new();
    for j in 0..=budget {
        for k in 0..=budget {
            if variety.weight(j, k) <= budget {
                for entry in 0..n * n {
                    unknowns.push(Unknown { degree: j + k, neg_j: -(j as i64), entry, j, k });
                }
            }
        }
    }
    unknowns.sort();

    let slopes: Vec<GaussianRational> = match variety {
        Variety::Lines { slopes } => slopes.clone(),
        _ => vec![GaussianRational::one()],
    };
    let mut rows: BTreeMap<EqKey, BTreeMap<usize, GaussianRational>> = BTreeMap::new();
    let mut emit = |key: EqKey, col: usize, c: GaussianRational| {
        let slot = rows.entry(key).or_default().entry(col).or_insert_with(GaussianRational::zero);
        *slot = &*slot + &c;
    };
    for (col, u) in unknowns.iter().enumerate() {
        let (hr, hc) = (u.entry / n, u.entry % n);
        // X · (m E_{hr,hc}) puts m·X[:, hr] in column hc;
        // (m E_{hr,hc}) · Y puts m·Y[hc, :] in row hr.
        let mut contributions = Vec::new();
        for r in 0..n {
            contributions.push((r * n + hc, x.get(r, hr), GaussianRational::one()));
        }
        for c in 0..n {
            contributions.push((hr * n + c, y.get(hc, c), -GaussianRational::one()));
        }
        for (eq_entry, poly, sign) in contributions {
            for (m, coef) in poly.terms() {
                let (j, k) = (m.exps()[0] + u.j, m.exps()[1] + u.k);
                let w = variety.weight(j, k);
                if w > order {
                    continue;
                }
                let c = coef * &sign;
                match variety {
                    Variety::FullPlane => emit((eq_entry, 0, j, k), col, c),
                    Variety::Cusp { .. } => emit((eq_entry, 0, w, 0), col, c),
                    Variety::Lines { .. } => {
                        for (l, t) in slopes.iter().enumerate() {
                            emit((eq_entry, l, w, 0), col, &c * &t.pow(k));
                        }
                    }
                }
            }
        }
    }
    rows.retain(|_, r| r.values().any(|c| !c.is_zero()));

    let ncols = unknowns.len();
    let row_list: Vec<_> = rows.values().collect();
    let system = Matrix::from_fn(row_list.len(), ncols, |i, j| {
        row_list[i].get(&j).cloned().unwrap_or_default()
    });
    let kernel = if rows.is_empty() {
        (0..ncols)
            .map(|c| (0..ncols).map(|i| if i == c { GaussianRational::one() } else { GaussianRational::zero() }).collect())
            .collect()
    } else {
        nullspace(&system)
    };

    // Columns holding the constant terms of the n² entries.
    let const_cols: Vec<usize> = (0..n * n)
        .map(|e| unknowns.iter().position(|u| u.degree == 0 && u.entry == e).expect("constant unknown"))
        .collect();
    let projected: Vec<Vec<GaussianRational>> =
        kernel.iter().map(|v| const_cols.iter().map(|&c| v[c].clone()).collect()).collect();
    let solution_space = if projected.is_empty() {
        Vec::new()
    } else {
        let (r, pivots) = rref(&Matrix::from_rows(projected).expect("rectangular"));
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    };

    let identity: Vec<GaussianRational> = (0..n * n)
        .map(|e| if e / n == e % n { GaussianRational::one() } else { GaussianRational::zero() })
        .collect();
    Ok(JetRigidityResult {
        variety: variety.clone(),
        relation,
        order,
        unknowns: ncols,
        equations: rows.len(),
        forces_zero: solution_space.is_empty(),
        scalar_line: solution_space == vec![identity],
        invertible_witness: invertible_point(&solution_space, n),
        solution_space,
    })
}

/// A point of the span with nonzero determinant, if any. The determinant is
/// a form of degree `n` on the span; for `n = 2` it is quadratic, so it
/// vanishes identically iff it vanishes on every basis vector and every sum
/// of two of them. Larger sizes fall back to a fixed set of small integer
/// combinations.
fn invertible_point(basis: &[Vec<GaussianRational>], n: usize) -> Option<Vec<GaussianRational>> {
    let is_invertible =
        |v: &Vec<GaussianRational>| !det(&Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())).is_zero();
    let combine = |coefs: &[i64]| -> Vec<GaussianRational> {
        (0..n * n)
            .map(|e| {
                coefs.iter().zip(basis).fold(GaussianRational::zero(), |acc, (c, b)| {
                    &acc + &(&b[e] * &GaussianRational::from_integer(*c))
                })
            })
            .collect()
    };
    let d = basis.len();
    let mut trials: Vec<Vec<i64>> = Vec::new();
    for i in 0..d {
        trials.push((0..d).map(|k| (k == i) as i64).collect());
    }
    for i in 0..d {
        for j in i + 1..d {
            trials.push((0..d).map(|k| (k == i || k == j) as i64).collect());
        }
    }
    if n > 2 {
        // Distinct powers of a base beat every cancellation for a form of degree n.
        for base in 2..=(n as i64 + 1) {
            trials.push((0..d as u32).map(|k| base.pow(k)).collect());
        }
    }
    trials.into_iter().map(|c| combine(&c)).find(is_invertible)
}
