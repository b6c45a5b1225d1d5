//! Jordan structure of a matrix family: Segre data at a point, the finite
//! set of points where the structure can change, probing for instability,
//! and the normalization near a stable point that conjugates the commutant
//! of `A(ζ)` onto the commutant of `A(ξ)`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebra::charpoly::{berkowitz, char_poly};
use crate::algebra::linalg::{inverse, nullspace, rank};
use crate::algebra::pid::{invariant_factors, principal_subresultant};
use crate::algebra::roots::{exact_roots, roots, Root};
use crate::algebra::{
    GaussianRational, Matrix, Poly, PolyMatrix, RationalFunction, ScalarMatrix, UniPoly,
};
use crate::error::{Error, Result};
use crate::similarity::{characteristic_matrix, intertwining_witness, local_similarity};
use crate::sylvester::{commutant_basis_at, sylvester_matrix};

/// Default clustering radius for numeric eigenvalues.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Default number of probe points used by [`is_jordan_stable`].
pub const DEFAULT_PROBES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SegreMode {
    /// Eigenvalues must be Gaussian rationals.
    Exact,
    /// Eigenvalues closer than `tolerance` are merged into one cluster.
    Numeric { tolerance: f64 },
}

impl Default for SegreMode {
    fn default() -> Self {
        SegreMode::Numeric { tolerance: DEFAULT_TOLERANCE }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Eigenvalue {
    Exact { value: GaussianRational },
    Numeric { re: f64, im: f64, radius: f64 },
}

impl Eigenvalue {
    fn approx(&self) -> (f64, f64) {
        match self {
            Eigenvalue::Exact { value } => {
                let c = value.to_complex64();
                (c.re, c.im)
            }
            Eigenvalue::Numeric { re, im, .. } => (*re, *im),
        }
    }

    fn radius(&self) -> f64 {
        match self {
            Eigenvalue::Exact { .. } => 0.0,
            Eigenvalue::Numeric { radius, .. } => *radius,
        }
    }
}

impl From<Root> for Eigenvalue {
    fn from(r: Root) -> Self {
        match r {
            Root::Exact { value } => Eigenvalue::Exact { value },
            Root::Algebraic { re, im, radius, .. } => Eigenvalue::Numeric { re, im, radius },
        }
    }
}

/// One eigenvalue with its algebraic multiplicity and Jordan block sizes
/// (descending).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenBlocks {
    pub value: Eigenvalue,
    pub multiplicity: usize,
    pub blocks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JordanProfile {
    pub size: usize,
    pub eigenvalues: Vec<EigenBlocks>,
}

impl JordanProfile {
    /// `Σ_λ Σ_{i,j} min(b_i, b_j)` over the block sizes of each eigenvalue.
    pub fn commutant_dim(&self) -> usize {
        self.eigenvalues
            .iter()
            .map(|e| {
                e.blocks
                    .iter()
                    .flat_map(|a| e.blocks.iter().map(move |b| (*a).min(*b)))
                    .sum::<usize>()
            })
            .sum()
    }

    /// Block partitions as a sorted multiset, forgetting eigenvalue values.
    pub fn signature(&self) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = self.eigenvalues.iter().map(|e| e.blocks.clone()).collect();
        s.sort();
        s
    }

    /// `rank (A − λ_j I)^k` implied by the block data.
    pub fn implied_rank(&self, j: usize, k: usize) -> usize {
        self.size - self.eigenvalues[j].blocks.iter().map(|&b| b.min(k)).sum::<usize>()
    }
}

/// Jordan data of `A(ζ₀)`.
pub fn segre_at(a: &PolyMatrix, point: &[GaussianRational], mode: SegreMode) -> Result<JordanProfile> {
    segre_of(&a.eval(point)?, mode)
}

/// Jordan data of a constant matrix.
pub fn segre_of(a0: &ScalarMatrix, mode: SegreMode) -> Result<JordanProfile> {
    if !a0.is_square() {
        return Err(Error::Size("Jordan data needs a square matrix".into()));
    }
    let n = a0.rows();
    let eigenvalues = match mode {
        SegreMode::Exact => {
            let ev = exact_roots(&char_poly(a0));
            if ev.iter().map(|(_, k)| k).sum::<usize>() != n {
                return Err(Error::DoesNotSplit);
            }
            ev.into_iter()
                .map(|(lam, k)| EigenBlocks {
                    blocks: blocks_from_ranks(a0, &lam, k),
                    value: Eigenvalue::Exact { value: lam },
                    multiplicity: k,
                })
                .collect()
        }
        SegreMode::Numeric { tolerance } => cluster(numeric_classes(a0), tolerance),
    };
    Ok(JordanProfile { size: n, eigenvalues })
}

/// Block sizes of `λ` read off `r_k = rank (A − λI)^k`: the number of blocks
/// of size `k` is `r_{k−1} − 2r_k + r_{k+1}`.
fn blocks_from_ranks(a0: &ScalarMatrix, lam: &GaussianRational, mult: usize) -> Vec<usize> {
    let n = a0.rows();
    let shifted = a0 - &ScalarMatrix::identity(n).scale(lam);
    let mut r = vec![n];
    let mut power = ScalarMatrix::identity(n);
    for _ in 0..=mult {
        power = &power * &shifted;
        r.push(rank(&power));
    }
    let mut blocks = Vec::new();
    for k in (1..=mult).rev() {
        let count = r[k - 1] + r[k + 1] - 2 * r[k];
        blocks.extend(std::iter::repeat_n(k, count));
    }
    blocks
}

/// Eigenvalues with block partitions from the elementary divisors of
/// `λI − A₀`: every invariant factor is split by Yun's decomposition, and the
/// squarefree part of the last one is refined into classes of roots sharing
/// the same partition.
fn numeric_classes(a0: &ScalarMatrix) -> Vec<EigenBlocks> {
    let fs = invariant_factors(&characteristic_matrix(a0));
    let Some(last) = fs.last() else {
        return Vec::new();
    };
    let mut classes: Vec<(UniPoly, Vec<usize>)> = vec![(last.squarefree_part(), Vec::new())];
    for d in &fs {
        let parts = d.squarefree_decomposition();
        let mut next = Vec::new();
        for (h, partition) in classes {
            let mut rest = h;
            for (f, k) in &parts {
                let g = UniPoly::gcd(&rest, f);
                if !g.is_constant() {
                    rest = rest.div_exact(&g).expect("gcd divides");
                    let mut p = partition.clone();
                    p.push(*k);
                    next.push((g, p));
                }
            }
            if !rest.is_constant() {
                next.push((rest, partition));
            }
        }
        classes = next;
    }
    let mut out = Vec::new();
    for (h, mut partition) in classes {
        partition.sort_unstable_by(|a, b| b.cmp(a));
        let k = partition.iter().sum();
        for r in roots(&h) {
            out.push(EigenBlocks { value: r.into(), multiplicity: k, blocks: partition.clone() });
        }
    }
    out
}

/// Merges eigenvalues closer than `tol`; a merged cluster is reported by its
/// centroid and a radius covering all members.
fn cluster(ev: Vec<EigenBlocks>, tol: f64) -> Vec<EigenBlocks> {
    let pts: Vec<(f64, f64)> = ev.iter().map(|e| e.value.approx()).collect();
    let mut label: Vec<usize> = (0..ev.len()).collect();
    // Single-linkage clustering by repeated relabelling; sizes are tiny.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..ev.len() {
            for j in i + 1..ev.len() {
                let d = (pts[i].0 - pts[j].0).hypot(pts[i].1 - pts[j].1);
                if d <= tol && label[i] != label[j] {
                    let (lo, hi) = (label[i].min(label[j]), label[i].max(label[j]));
                    label.iter_mut().filter(|l| **l == hi).for_each(|l| *l = lo);
                    changed = true;
                }
            }
        }
    }
    let mut out = Vec::new();
    for c in 0..ev.len() {
        let members: Vec<usize> = (0..ev.len()).filter(|&i| label[i] == c).collect();
        match members.as_slice() {
            [] => {}
            [i] => out.push(ev[*i].clone()),
            _ => {
                let m = members.len() as f64;
                let re = members.iter().map(|&i| pts[i].0).sum::<f64>() / m;
                let im = members.iter().map(|&i| pts[i].1).sum::<f64>() / m;
                let radius = members
                    .iter()
                    .map(|&i| (pts[i].0 - re).hypot(pts[i].1 - im) + ev[i].value.radius())
                    .fold(0.0, f64::max);
                let mut blocks: Vec<usize> =
                    members.iter().flat_map(|&i| ev[i].blocks.iter().copied()).collect();
                blocks.sort_unstable_by(|a, b| b.cmp(a));
                out.push(EigenBlocks {
                    value: Eigenvalue::Numeric { re, im, radius },
                    multiplicity: members.iter().map(|&i| ev[i].multiplicity).sum(),
                    blocks,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        let (x, y) = (a.value.approx(), b.value.approx());
        x.0.partial_cmp(&y.0)
            .unwrap_or(Ordering::Equal)
            .then(x.1.partial_cmp(&y.1).unwrap_or(Ordering::Equal))
    });
    out
}

/// The two polynomials in `z` whose zeros may break Jordan stability.
struct Loci {
    /// First nonvanishing principal subresultant of `χ` and `∂χ/∂λ`; it
    /// vanishes exactly where the number of distinct eigenvalues drops.
    collision: UniPoly,
    /// Last invariant factor of `M_{A,A}`; it vanishes exactly where the
    /// commutant dimension exceeds its generic value.
    jump: UniPoly,
}

fn loci(a: &PolyMatrix) -> Result<Option<Loci>> {
    if a.vars().is_empty() {
        return Ok(None);
    }
    if !a.is_univariate() {
        return Err(Error::NotUnivariate(a.vars().to_vec()));
    }
    if !a.is_square() {
        return Err(Error::Size("Jordan data needs a square matrix".into()));
    }
    let chi = berkowitz(&a.to_unipoly()?);
    let dchi: Vec<UniPoly> = chi
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&GaussianRational::from_integer(k as i64)))
        .collect();
    let n = a.rows();
    let collision = if n <= 1 {
        UniPoly::one()
    } else {
        (0..n)
            .map(|j| principal_subresultant(&chi, &dchi, j))
            .find(|p| !p.is_zero())
            .expect("the top subresultant is a nonzero constant")
    };
    let m = sylvester_matrix(a, a)?.m.to_unipoly()?;
    let jump = invariant_factors(&m).pop().unwrap_or_else(UniPoly::one);
    Ok(Some(Loci { collision, jump }))
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidates {
    /// Every point where Jordan stability may fail.
    pub points: Vec<Root>,
    pub collision_locus: Vec<Root>,
    pub commutant_jump_locus: Vec<Root>,
}

/// A finite superset of the points that are not Jordan stable.
pub fn jordan_instability_candidates(a: &PolyMatrix) -> Result<Candidates> {
    let Some(l) = loci(a)? else {
        return Ok(Candidates { points: vec![], collision_locus: vec![], commutant_jump_locus: vec![] });
    };
    let both = &l.collision.squarefree_part() * &l.jump.squarefree_part();
    Ok(Candidates {
        points: roots(&both),
        collision_locus: roots(&l.collision),
        commutant_jump_locus: roots(&l.jump),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Stable,
    Unstable,
    Undetermined,
}

#[derive(Clone, Debug, Serialize)]
pub struct Probe {
    pub point: GaussianRational,
    pub profile: JordanProfile,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub point: GaussianRational,
    pub candidate_points: Vec<Root>,
    pub is_candidate: bool,
    pub verdict: Verdict,
    pub profile_at_point: JordanProfile,
    pub probes: Vec<Probe>,
}

/// `ω/1000` for `ω` the `k`-th of `count` roots of unity, rounded to six
/// decimals.
pub fn probe_offset(k: usize, count: usize) -> GaussianRational {
    let t = std::f64::consts::TAU * k as f64 / count as f64;
    let q = |x: f64| (x * 1e6).round() as i64;
    GaussianRational::from_parts((q(t.cos()), 1_000_000_000), (q(t.sin()), 1_000_000_000))
}

/// Non-candidates are stable. At a candidate the Jordan data at `ξ` is
/// compared with that at `probes` nearby points: a difference proves
/// instability, agreement leaves the question open.
pub fn is_jordan_stable(a: &PolyMatrix, xi: &GaussianRational, probes: usize) -> Result<StabilityReport> {
    is_jordan_stable_with(a, xi, probes, SegreMode::default())
}

/// [`is_jordan_stable`] with an explicit mode for the Jordan data.
pub fn is_jordan_stable_with(
    a: &PolyMatrix,
    xi: &GaussianRational,
    probes: usize,
    mode: SegreMode,
) -> Result<StabilityReport> {
    let candidates = jordan_instability_candidates(a)?;
    let is_candidate = match loci(a)? {
        Some(l) => l.collision.eval(xi).is_zero() || l.jump.eval(xi).is_zero(),
        None => false,
    };
    let pt = |x: &GaussianRational| -> Vec<GaussianRational> {
        if a.vars().is_empty() {
            vec![]
        } else {
            vec![x.clone()]
        }
    };
    let here = segre_at(a, &pt(xi), mode)?;
    let mut report = StabilityReport {
        point: xi.clone(),
        candidate_points: candidates.points,
        is_candidate,
        verdict: Verdict::Stable,
        profile_at_point: here,
        probes: Vec::new(),
    };
    if !is_candidate {
        return Ok(report);
    }
    report.verdict = Verdict::Undetermined;
    for k in 0..probes {
        let p = xi + &probe_offset(k, probes);
        let profile = segre_at(a, &pt(&p), mode)?;
        if profile.signature() != report.profile_at_point.signature() {
            report.verdict = Verdict::Unstable;
        }
        report.probes.push(Probe { point: p, profile });
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct StableNormalization {
    pub point: GaussianRational,
    /// `H` with `H(ξ) = I` and `A H = H J`.
    pub h: Matrix<RationalFunction>,
    /// The block-diagonal model `J`.
    pub model: Matrix<RationalFunction>,
    /// `Φ` with `A(ξ) Φ = Φ J(ξ)`.
    pub seed: ScalarMatrix,
    pub multiplicities: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
    /// `H⁻¹ C H ∈ Com A(ξ)` for every `C` in a basis of the commutant of `A`
    /// over the rational functions, and the two commutants have one
    /// dimension.
    pub certified: bool,
}

/// Multiplicity of the root `mu` of the polynomial with coefficients `c`
/// (ascending); divides it out of `c`.
fn divide_out(c: &mut Vec<RationalFunction>, mu: &RationalFunction) -> usize {
    let mut k = 0;
    while c.len() > 1 {
        // Synthetic division by (λ − μ).
        let n = c.len() - 1;
        let mut q = vec![c[n].clone(); n];
        for i in (0..n - 1).rev() {
            q[i] = &c[i + 1] + &(mu * &q[i + 1]);
        }
        let rem = &c[0] + &(mu * &q[0]);
        if !rem.is_zero() {
            break;
        }
        *c = q;
        k += 1;
    }
    k
}

/// Conjugates `A` near the stable point `ξ` into block-diagonal form with
/// diagonal blocks `λ_j I + N_j`, using caller-supplied eigenvalue functions
/// `λ_j`. The returned `H` maps the commutant of `A(ζ)` onto that of `A(ξ)`,
/// which is certified on a basis.
pub fn stable_normalization(
    a: &PolyMatrix,
    xi: &GaussianRational,
    eigenfunctions: &[RationalFunction],
    seed: u64,
) -> Result<StableNormalization> {
    if !a.is_univariate() {
        return Err(Error::NotUnivariate(a.vars().to_vec()));
    }
    let n = a.rows();
    let vars = a.vars().clone();
    let pt = std::slice::from_ref(xi);
    if eigenfunctions.iter().any(|f| f.vars() != &vars) {
        return Err(Error::EigenfunctionMismatch);
    }

    // χ(λ) = Π (λ − λ_j)^{k_j} over the rational functions.
    let mut chi = berkowitz(&a.to_rational());
    let mut mults = Vec::new();
    for f in eigenfunctions {
        let k = divide_out(&mut chi, f);
        if k == 0 {
            return Err(Error::EigenfunctionMismatch);
        }
        mults.push(k);
    }
    if chi.len() != 1 {
        return Err(Error::EigenfunctionMismatch);
    }

    let values: Vec<GaussianRational> = eigenfunctions
        .iter()
        .map(|f| f.eval(pt).map_err(|_| Error::EigenfunctionMismatch))
        .collect::<Result<_>>()?;
    for i in 0..values.len() {
        if values[i + 1..].contains(&values[i]) {
            return Err(Error::Invalid("eigenvalue functions must differ at the point".into()));
        }
    }

    // Model J: one Jordan block per block of A(ξ), eigenvalue λ_j(z).
    let a0 = a.eval(pt)?;
    let blocks: Vec<Vec<usize>> =
        values.iter().zip(&mults).map(|(v, k)| blocks_from_ranks(&a0, v, *k)).collect();
    let zero = RationalFunction::zero(vars.clone());
    let one = RationalFunction::one(vars.clone());
    let mut model = Matrix::zeros_like(&zero, n, n);
    let mut pos = 0;
    for (f, bs) in eigenfunctions.iter().zip(&blocks) {
        for &b in bs {
            for i in pos..pos + b {
                model.set(i, i, f.clone());
                if i + 1 < pos + b {
                    model.set(i, i + 1, one.clone());
                }
            }
            pos += b;
        }
    }
    if pos != n {
        return Err(Error::SeedConstruction);
    }

    // Clear denominators: q A h = h q J with both sides polynomial.
    let q = eigenfunctions.iter().fold(UniPoly::one(), |acc, f| {
        let d = f.denom().to_unipoly().expect("univariate");
        let g = UniPoly::gcd(&acc, &d);
        (&acc * &d).div_exact(&g).expect("gcd divides")
    });
    let qr = RationalFunction::from_poly(Poly::from_unipoly_in(&q, &vars));
    let qa = PolyMatrix::new(vars.clone(), a.map(|p| p * &Poly::from_unipoly_in(&q, &vars)))?;
    let qj = PolyMatrix::new(
        vars.clone(),
        model.map(|f| (f * &qr).numer().clone()),
    )?;

    let j0 = model.try_map(|f| f.eval(pt))?;
    let phi = intertwining_witness(&a0, &j0, seed).map_err(|_| Error::SeedConstruction)?;
    let h = local_similarity(&qa, &qj, xi, &phi)?.h;
    let phi_inv = inverse(&phi).ok_or(Error::SeedConstruction)?;
    let h = &h * &phi_inv.map(|c| RationalFunction::constant(vars.clone(), c.clone()));

    let certified = certify(a, xi, &h)?;
    Ok(StableNormalization {
        point: xi.clone(),
        h,
        model,
        seed: phi,
        multiplicities: mults,
        blocks,
        certified,
    })
}

/// Checks `H⁻¹ (Com A) H = Com A(ξ)` on a basis of the generic commutant.
fn certify(a: &PolyMatrix, xi: &GaussianRational, h: &Matrix<RationalFunction>) -> Result<bool> {
    let n = a.rows();
    let vars = a.vars().clone();
    let Some(h_inv) = inverse(h) else {
        return Ok(false);
    };
    let generic = nullspace(&sylvester_matrix(a, a)?.m.to_rational());
    let local: Vec<Vec<RationalFunction>> = commutant_basis_at(a, std::slice::from_ref(xi))?
        .basis
        .iter()
        .map(|t| {
            t.vec_column_major()
                .into_iter()
                .map(|c| RationalFunction::constant(vars.clone(), c))
                .collect()
        })
        .collect();
    if generic.len() != local.len() {
        return Ok(false);
    }
    let d = local.len();
    for v in generic {
        let c = Matrix::unvec_column_major(&v, n, n);
        let x = &(&h_inv * &c) * h;
        let mut cols = local.clone();
        cols.push(x.vec_column_major());
        let m = Matrix::from_fn(n * n, d + 1, |i, j| cols[j][i].clone());
        if rank(&m) != d {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_strs(&["z"], rows).unwrap()
    }

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn exact_points(c: &[Root]) -> Vec<GaussianRational> {
        c.iter().map(|r| r.exact().unwrap().clone()).collect()
    }

    #[test]
    fn segre_examples() {
        let a = pm(&[&["z", "1"], &["0", "0"]]);
        let p = segre_at(&a, &[g("0")], SegreMode::Exact).unwrap();
        assert_eq!(p.eigenvalues.len(), 1);
        assert_eq!(p.eigenvalues[0].blocks, vec![2]);
        let p = segre_at(&a, &[g("1")], SegreMode::Exact).unwrap();
        assert_eq!(p.signature(), vec![vec![1], vec![1]]);
        let id = ScalarMatrix::identity(3);
        for mode in [SegreMode::Exact, SegreMode::default()] {
            let p = segre_of(&id, mode).unwrap();
            assert_eq!(p.eigenvalues.len(), 1);
            assert_eq!(p.eigenvalues[0].blocks, vec![1, 1, 1]);
            assert_eq!(p.commutant_dim(), 9);
        }
    }

    #[test]
    fn modes_agree_and_numeric_handles_irrational_spectra() {
        let a = ScalarMatrix::from_integers(&[&[2, 1, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 5]]);
        let e = segre_of(&a, SegreMode::Exact).unwrap();
        let n = segre_of(&a, SegreMode::default()).unwrap();
        assert_eq!(e, n);
        assert_eq!(e.eigenvalues[0].blocks, vec![2, 1]);
        // x^2 − 2 does not split over Q(i).
        let b = ScalarMatrix::from_integers(&[&[0, 2], &[1, 0]]);
        assert_eq!(segre_of(&b, SegreMode::Exact), Err(Error::DoesNotSplit));
        let p = segre_of(&b, SegreMode::default()).unwrap();
        assert_eq!(p.signature(), vec![vec![1], vec![1]]);
        // With a huge tolerance the two roots merge.
        let p = segre_of(&b, SegreMode::Numeric { tolerance: 10.0 }).unwrap();
        assert_eq!(p.eigenvalues.len(), 1);
        assert_eq!(p.eigenvalues[0].multiplicity, 2);
    }

    #[test]
    fn candidate_examples() {
        let a = pm(&[&["z", "1"], &["0", "0"]]);
        assert_eq!(exact_points(&jordan_instability_candidates(&a).unwrap().points), vec![g("0")]);
        let b = pm(&[&["0", "1"], &["0", "z"]]);
        assert_eq!(exact_points(&jordan_instability_candidates(&b).unwrap().points), vec![g("0")]);
        let c = pm(&[&["1", "2"], &["3", "4"]]);
        assert!(jordan_instability_candidates(&c).unwrap().points.is_empty());
        // Commutant jump without eigenvalue collision: z·N.
        let d = pm(&[&["0", "z"], &["0", "0"]]);
        let cand = jordan_instability_candidates(&d).unwrap();
        assert!(cand.collision_locus.is_empty());
        assert_eq!(exact_points(&cand.commutant_jump_locus), vec![g("0")]);
    }

    #[test]
    fn stability_examples() {
        let a = pm(&[&["z", "1"], &["0", "0"]]);
        let r = is_jordan_stable(&a, &g("0"), DEFAULT_PROBES).unwrap();
        assert_eq!(r.verdict, Verdict::Unstable);
        assert_eq!(r.profile_at_point.eigenvalues.len(), 1);
        assert_eq!(r.probes[0].profile.eigenvalues.len(), 2);
        assert_eq!(is_jordan_stable(&a, &g("3"), DEFAULT_PROBES).unwrap().verdict, Verdict::Stable);
        let c = pm(&[&["1", "2"], &["3", "4"]]);
        assert_eq!(is_jordan_stable(&c, &g("0"), DEFAULT_PROBES).unwrap().verdict, Verdict::Stable);
    }

    #[test]
    fn probe_offsets_are_small() {
        assert_eq!(probe_offset(0, 4), g("1/1000"));
        assert_eq!(probe_offset(1, 4), g("1/1000i"));
    }

    #[test]
    fn normalization_examples() {
        let vars = crate::algebra::vars(&["z"]);
        let rf = |s: &str| RationalFunction::from_poly(Poly::parse(vars.clone(), s).unwrap());
        let a = pm(&[&["z", "1"], &["0", "0"]]);
        let s = stable_normalization(&a, &g("3"), &[rf("z"), rf("0")], 0).unwrap();
        assert!(s.certified);
        let h0 = s.h.try_map(|f| f.eval(&[g("3")])).unwrap();
        assert!(h0.is_identity());
        let d = pm(&[&["z", "0"], &["0", "z+1"]]);
        let s = stable_normalization(&d, &g("0"), &[rf("z"), rf("z+1")], 0).unwrap();
        assert!(s.certified);
        assert!(s.h.is_identity());
        assert!(matches!(
            stable_normalization(&a, &g("3"), &[rf("z"), rf("1")], 0),
            Err(Error::EigenfunctionMismatch)
        ));
    }
}
