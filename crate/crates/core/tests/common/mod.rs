//! Shared helpers for integration tests: seeded generators and an
//! independent oracle.
#![allow(dead_code)]

pub mod oracle;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use similitude::{vars, GaussianRational, Matrix, Poly, PolyMatrix, ScalarMatrix, UniPoly};

pub fn g(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

pub fn pm(rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_strs(&["z"], rows).unwrap()
}

pub struct Gen(pub ChaCha8Rng);

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.0.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.0.gen_bool(p)
    }

    /// Small Gaussian rational with denominators in {1, 2, 3}.
    pub fn scalar(&mut self) -> GaussianRational {
        let re = (self.int(-4, 4), self.int(1, 3));
        let im = if self.coin(0.3) { (self.int(-3, 3), self.int(1, 2)) } else { (0, 1) };
        GaussianRational::from_parts(re, im)
    }

    pub fn gaussian_integer(&mut self, r: i64) -> GaussianRational {
        let re = self.int(-r, r);
        let im = if self.coin(0.3) { self.int(-r, r) } else { 0 };
        GaussianRational::from_parts((re, 1), (im, 1))
    }

    /// A point from a small set used for Smith tests.
    pub fn special_point(&mut self) -> GaussianRational {
        const PTS: [&str; 6] = ["0", "1", "-1", "1/2", "i", "2-i"];
        g(PTS[self.int(0, 5) as usize])
    }

    pub fn unipoly(&mut self, deg: usize) -> UniPoly {
        let d = self.int(0, deg as i64) as usize;
        UniPoly::new((0..=d).map(|_| self.gaussian_integer(3)).collect())
    }

    pub fn scalar_matrix(&mut self, n: usize, r: i64) -> ScalarMatrix {
        Matrix::from_fn(n, n, |_, _| self.gaussian_integer(r))
    }

    pub fn invertible_scalar(&mut self, n: usize) -> ScalarMatrix {
        loop {
            let m = self.scalar_matrix(n, 3);
            if !oracle::det(&m).is_zero() {
                return m;
            }
        }
    }

    pub fn poly_matrix(&mut self, rows: usize, cols: usize, deg: usize) -> PolyMatrix {
        let mut entries = Vec::new();
        for _ in 0..rows * cols {
            let sparse = self.coin(0.25);
            entries.push(if sparse { UniPoly::zero() } else { self.unipoly(deg) });
        }
        from_unipolys(rows, cols, &entries)
    }

    /// `U · diag((z−ξ)^{k_i}, 0…) · V` with `U`, `V` of degree ≤ 1, so the
    /// local exponents at `ξ` are usually nontrivial.
    pub fn structured_matrix(&mut self, rows: usize, cols: usize, xi: &GaussianRational) -> PolyMatrix {
        let u = self.poly_matrix(rows, rows, 1);
        let v = self.poly_matrix(cols, cols, 1);
        let lin = UniPoly::linear_root(xi);
        let d: Vec<UniPoly> = (0..rows * cols)
            .map(|idx| {
                let (i, j) = (idx / cols, idx % cols);
                if i == j && self.coin(0.85) {
                    lin.pow(self.int(0, 2) as u32)
                } else {
                    UniPoly::zero()
                }
            })
            .collect();
        let d = from_unipolys(rows, cols, &d);
        &(&u * &d) * &v
    }
}

pub fn from_unipolys(rows: usize, cols: usize, entries: &[UniPoly]) -> PolyMatrix {
    let vz = vars(&["z"]);
    PolyMatrix::new(
        vz.clone(),
        Matrix::from_fn(rows, cols, |i, j| Poly::from_unipoly_in(&entries[i * cols + j], &vz)),
    )
    .unwrap()
}

impl Gen {
    /// `L·U` with unit triangular polynomial factors, so `det = 1` and the
    /// inverse is polynomial too.
    pub fn unimodular(&mut self, n: usize, deg: usize) -> (PolyMatrix, PolyMatrix) {
        let vz = vars(&["z"]);
        let one = Poly::one(vz.clone());
        let zero = Poly::zero(vz.clone());
        let mut l = Matrix::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() });
        let mut u = l.clone();
        for i in 0..n {
            for j in 0..i {
                l.set(i, j, Poly::from_unipoly_in(&self.unipoly(deg), &vz));
                u.set(j, i, Poly::from_unipoly_in(&self.unipoly(deg), &vz));
            }
        }
        let (l, u) = (PolyMatrix::new(vz.clone(), l).unwrap(), PolyMatrix::new(vz.clone(), u).unwrap());
        let h = &l * &u;
        let inv = &unit_triangular_inverse(&u) * &unit_triangular_inverse(&l);
        (h, inv)
    }

    /// A constant matrix with Gaussian-integer spectrum and random Jordan
    /// structure, conjugated by a random unimodular integer matrix.
    pub fn jordan_type(&mut self, n: usize) -> ScalarMatrix {
        let eigen: Vec<GaussianRational> = (0..2).map(|_| self.gaussian_integer(2)).collect();
        let mut j = ScalarMatrix::zeros(n, n);
        for i in 0..n {
            j.set(i, i, eigen[self.int(0, 1) as usize].clone());
        }
        for i in 0..n.saturating_sub(1) {
            if j.get(i, i) == j.get(i + 1, i + 1) && self.coin(0.6) {
                j.set(i, i + 1, GaussianRational::one());
            }
        }
        let (h, inv) = self.unimodular(n, 0);
        let (h, inv) = (h.eval(&[GaussianRational::zero()]).unwrap(), inv.eval(&[GaussianRational::zero()]).unwrap());
        &(&inv * &j) * &h
    }
}

/// Inverse of a unit triangular polynomial matrix: `Σ_{k<n} (I − T)^k`.
fn unit_triangular_inverse(t: &PolyMatrix) -> PolyMatrix {
    let n = t.rows();
    let id = PolyMatrix::identity(t.vars().clone(), n);
    let nil = &id - t;
    let mut acc = id.clone();
    let mut power = id;
    for _ in 1..n {
        power = &power * &nil;
        acc = &acc + &power;
    }
    acc
}
