//! The six index sets whose emptiness makes the three isolated coefficient
//! comparisons on the cusp `z^p = w^q` work.

use serde::Serialize;

/// Solutions `(j, k) ∈ N²` of the defining equations. Every equation takes
/// the form `q·j + p·k = R` once the monomial weights are expanded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexSets {
    pub a_beta: Vec<(u64, u64)>,
    pub a_gamma: Vec<(u64, u64)>,
    pub b_alpha: Vec<(u64, u64)>,
    pub b_gamma: Vec<(u64, u64)>,
    pub c_alpha: Vec<(u64, u64)>,
    pub c_beta: Vec<(u64, u64)>,
}

impl IndexSets {
    pub fn all_empty(&self) -> bool {
        self.named().iter().all(|(_, s)| s.is_empty())
    }

    pub fn named(&self) -> [(&'static str, &Vec<(u64, u64)>); 6] {
        [
            ("A_beta", &self.a_beta),
            ("A_gamma", &self.a_gamma),
            ("B_alpha", &self.b_alpha),
            ("B_gamma", &self.b_gamma),
            ("C_alpha", &self.c_alpha),
            ("C_beta", &self.c_beta),
        ]
    }
}

/// All `(j, k)` with `q j + p k = rhs`. Since `p, q ≥ 1`, `j ≤ rhs/q` bounds
/// the search.
fn solve(p: i64, q: i64, rhs: i64) -> Vec<(u64, u64)> {
    if rhs < 0 {
        return Vec::new();
    }
    (0..=rhs / q)
        .filter_map(|j| {
            let rest = rhs - q * j;
            (rest % p == 0).then_some((j as u64, (rest / p) as u64))
        })
        .collect()
}

/// # Panics
/// If `p` or `q` is zero.
pub fn index_sets(p: u32, q: u32, ell: u32) -> IndexSets {
    assert!(p >= 1 && q >= 1, "p and q must be positive");
    let (p, q, l) = (p as i64, q as i64, ell as i64);
    // t-weights of the three compared coefficients
    let t_alpha = (l + 3) * q;
    let t_beta = (l + 3) * p;
    let t_gamma = (l + 2) * (p + q);
    IndexSets {
        // β_{jk} reaches t^{jq + (k+ℓ+3)p}; γ_{jk} reaches t^{(j+ℓ+2)q + (k+ℓ+2)p};
        // α_{jk} reaches t^{(j+ℓ+3)q + kp}.
        a_beta: solve(p, q, t_alpha - (l + 3) * p),
        a_gamma: solve(p, q, t_alpha - t_gamma),
        b_alpha: solve(p, q, t_beta - (l + 3) * q),
        b_gamma: solve(p, q, t_beta - t_gamma),
        c_alpha: solve(p, q, t_gamma - (l + 3) * q),
        c_beta: solve(p, q, t_gamma - (l + 3) * p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        // With q = ℓ+3 the term α_{p−ℓ−3,0} z^{p} meets β_{00} w^{ℓ+3}, since z^p = w^q on the cusp.
        let s = index_sets(4, 3, 0);
        assert_eq!(s.b_alpha, vec![(1, 0)]);
        assert_eq!(s.named().iter().filter(|(_, v)| !v.is_empty()).count(), 1);
        assert_eq!(index_sets(7, 5, 2).b_alpha, vec![(2, 0)]);
        assert!(index_sets(5, 4, 0).all_empty());
        assert!(index_sets(8, 7, 2).all_empty());
        let s = index_sets(2, 2, 0);
        assert_eq!(s.a_beta, vec![(0, 0)]);
        assert!(!s.all_empty());
    }

    #[test]
    fn empty_exactly_when_q_exceeds_ell_plus_three() {
        for ell in 0..4u32 {
            for q in ell + 3..ell + 9 {
                for p in q + 1..q + 8 {
                    if num::integer::gcd(p, q) == 1 {
                        assert_eq!(index_sets(p, q, ell).all_empty(), q > ell + 3, "{p} {q} {ell}");
                    }
                }
            }
        }
    }
}
