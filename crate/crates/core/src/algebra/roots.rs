//! Roots of univariate polynomials: numeric approximation, exact
//! Gaussian-rational extraction, and isolating descriptions for the rest.

use std::cmp::Ordering;

use num::Complex;
use serde::Serialize;

use super::scalar::GaussianRational;
use super::unipoly::UniPoly;

type C64 = Complex<f64>;

/// A root given either exactly or by a defining polynomial together with a
/// numeric approximation and an estimated isolation radius.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Root {
    Exact {
        value: GaussianRational,
    },
    Algebraic {
        /// A squarefree polynomial vanishing at the root (not necessarily
        /// irreducible).
        polynomial: String,
        re: f64,
        im: f64,
        radius: f64,
    },
}

impl Root {
    pub fn approx(&self) -> C64 {
        match self {
            Root::Exact { value } => value.to_complex64(),
            Root::Algebraic { re, im, .. } => C64::new(*re, *im),
        }
    }

    pub fn exact(&self) -> Option<&GaussianRational> {
        match self {
            Root::Exact { value } => Some(value),
            Root::Algebraic { .. } => None,
        }
    }
}

fn horner(c: &[C64], x: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for a in c.iter().rev() {
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp)
}

/// All complex roots with multiplicity, by Aberth iteration followed by
/// Newton polishing. Intended for squarefree inputs.
pub fn numeric_roots(p: &UniPoly) -> Vec<C64> {
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let c: Vec<C64> = p.monic().coeffs().iter().map(|x| x.to_complex64()).collect();
    // Cauchy bound for the initial circle.
    let bound = 1.0 + c[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4;
            C64::from_polar(bound * 0.5, th)
        })
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (pv, dpv) = horner(&c, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dpv;
            let s: C64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        C64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (C64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..3 {
            let (pv, dpv) = horner(&c, *r);
            if dpv.norm() == 0.0 {
                break;
            }
            let step = pv / dpv;
            if step.is_finite() {
                *r -= step;
            }
        }
    }
    z
}

/// Gaussian-rational roots of `p` with multiplicities, sorted canonically.
///
/// Candidates come from rounding `a_n·r` for numeric roots `r` of the
/// squarefree part (with Gaussian-integer coefficients, `a_n` the leading
/// coefficient); every candidate is verified exactly.
pub fn exact_roots(p: &UniPoly) -> Vec<(GaussianRational, usize)> {
    if p.is_constant() {
        return Vec::new();
    }
    let sf = p.squarefree_part().clear_denominators();
    let lc = sf.lc();
    let mut out: Vec<(GaussianRational, usize)> = Vec::new();
    for r in numeric_roots(&sf) {
        let Some(scaled) = GaussianRational::from_f64(r.re, r.im) else {
            continue;
        };
        let cand = &(&scaled * &lc).round() / &lc;
        if out.iter().any(|(x, _)| *x == cand) || !sf.eval(&cand).is_zero() {
            continue;
        }
        let mult = multiplicity(p, &cand);
        out.push((cand, mult));
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    out
}

fn multiplicity(p: &UniPoly, a: &GaussianRational) -> usize {
    p.valuation_at(a).unwrap_or(0)
}

/// Every distinct root of `p`: exact ones first (canonical order), then the
/// remaining ones described by the squarefree cofactor, ordered by real then
/// imaginary part of the approximation.
pub fn roots(p: &UniPoly) -> Vec<Root> {
    if p.is_constant() {
        return Vec::new();
    }
    let exact = exact_roots(p);
    let mut rest = p.squarefree_part();
    for (a, _) in &exact {
        rest = rest.div_exact(&UniPoly::linear_root(a)).expect("exact root divides");
    }
    let mut out: Vec<Root> = exact.into_iter().map(|(value, _)| Root::Exact { value }).collect();
    if !rest.is_constant() {
        let rest = rest.monic();
        let text = super::Poly::from_unipoly(&rest, "x").to_string();
        let c: Vec<C64> = rest.coeffs().iter().map(|x| x.to_complex64()).collect();
        let dc: Vec<C64> = rest.derivative().coeffs().iter().map(|x| x.to_complex64()).collect();
        let n = rest.degree().unwrap() as f64;
        let mut approx = numeric_roots(&rest);
        approx.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap_or(Ordering::Equal)
                .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
        });
        for r in approx {
            let pv = horner(&c, r).0;
            let dv = horner(&dc, r).0;
            // Newton-type inclusion estimate n|p/p'|, floored at round-off.
            let radius = (n * pv.norm() / dv.norm()).max(1e-12 * (1.0 + r.norm()));
            out.push(Root::Algebraic {
                polynomial: text.clone(),
                re: r.re,
                im: r.im,
                radius,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn exact_gaussian_roots() {
        // (x − 1/2)^2 (x + i)(x − 3 + 2i)
        let p = &(&UniPoly::linear_root(&g("1/2")).pow(2) * &UniPoly::linear_root(&g("-i")))
            * &UniPoly::linear_root(&g("3-2i"));
        let r = exact_roots(&p);
        assert_eq!(r, vec![(g("-i"), 1), (g("1/2"), 2), (g("3-2i"), 1)]);
    }

    #[test]
    fn irrational_roots_are_described() {
        // x(x^2 − 2)
        let p = UniPoly::from_integers(&[0, -2, 0, 1]);
        let r = roots(&p);
        assert_eq!(r.len(), 3);
        assert_eq!(r[0], Root::Exact { value: g("0") });
        match &r[1] {
            Root::Algebraic { polynomial, re, radius, .. } => {
                assert_eq!(polynomial, "x^2-2");
                assert!((re + 2f64.sqrt()).abs() < 1e-12);
                assert!(*radius < 1e-9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
