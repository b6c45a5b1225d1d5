//! Univariate arithmetic routed through `Z[i][x]`. Rational coefficients
//! renormalise after every operation, which dominates the cost of
//! rational-function arithmetic; clearing denominators once and working with
//! Gaussian integers keeps the inner loops free of gcds.

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{Complex, One, Zero};

use super::scalar::GaussianRational;
use super::unipoly::UniPoly;

type Zi = Complex<BigInt>;

fn norm(a: &Zi) -> BigInt {
    &a.re * &a.re + &a.im * &a.im
}

/// Nearest integer to `x / n` for `n > 0`.
fn round_div(x: &BigInt, n: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (x * &two + n).div_floor(&(n * &two))
}

fn zi_gcd(a: &Zi, b: &Zi) -> Zi {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let n = norm(&b);
        let t = &a * b.conj();
        let q = Zi::new(round_div(&t.re, &n), round_div(&t.im, &n));
        let r = &a - &(&q * &b);
        a = b;
        b = r;
    }
    a
}

/// `a / b`, known to be exact.
fn zi_div_exact(a: &Zi, b: &Zi) -> Zi {
    let n = norm(b);
    let t = a * b.conj();
    debug_assert!(t.re.is_multiple_of(&n) && t.im.is_multiple_of(&n));
    Zi::new(&t.re / &n, &t.im / &n)
}

fn trim(v: &mut Vec<Zi>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive(v: Vec<Zi>) -> Vec<Zi> {
    primitive_with(v).0
}

/// `p = v / l` with `v` integral and `l` a positive integer.
fn split(p: &UniPoly) -> (Vec<Zi>, BigInt) {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.re().denom()).lcm(c.im().denom());
    }
    let scale = |r: &BigRational| r.numer() * (&l / r.denom());
    let v = p.coeffs().iter().map(|c| Zi::new(scale(c.re()), scale(c.im()))).collect();
    (v, l)
}

fn to_integral(p: &UniPoly) -> Vec<Zi> {
    split(p).0
}

/// `v / l`
fn join(v: &[Zi], l: &BigInt) -> UniPoly {
    let r = |x: &BigInt| BigRational::new(x.clone(), l.clone());
    UniPoly::new(v.iter().map(|c| GaussianRational::new(r(&c.re), r(&c.im))).collect())
}

fn to_unipoly(v: &[Zi]) -> UniPoly {
    join(v, &BigInt::one())
}

fn mul_integral(a: &[Zi], b: &[Zi]) -> Vec<Zi> {
    let mut out = vec![Zi::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Product of two nonzero polynomials.
pub(super) fn mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let ((va, la), (vb, lb)) = (split(a), split(b));
    join(&mul_integral(&va, &vb), &(la * lb))
}

/// `a / b` when `b` divides `a`, by integral pseudo-division.
pub(super) fn div_exact(a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
    assert!(!b.is_zero(), "division by zero polynomial");
    let ((va, la), (vb, lb)) = (split(a), split(b));
    let vb = primitive_with(vb);
    let (vb, cb) = vb;
    let db = vb.len() - 1;
    if va.len() <= db {
        return a.is_zero().then(UniPoly::zero);
    }
    let lead = vb[db].clone();
    // Pseudo-division keeping the quotient over a common denominator
    // lead^k, which grows only when a step actually needs it.
    let mut r = va;
    let mut q = vec![Zi::zero(); r.len() - db];
    let mut k = 0usize;
    while r.len() > db {
        let s = r.len() - 1 - db;
        let top = r.last().unwrap().clone();
        let t = &top * lead.conj();
        let n = norm(&lead);
        let c = if t.re.is_multiple_of(&n) && t.im.is_multiple_of(&n) {
            Zi::new(&t.re / &n, &t.im / &n)
        } else {
            for x in r.iter_mut().chain(q.iter_mut()) {
                *x = &*x * &lead;
            }
            k += 1;
            top
        };
        for (j, y) in vb.iter().enumerate() {
            r[s + j] = &r[s + j] - &(&c * y);
        }
        q[s] = &q[s] + &c;
        trim(&mut r);
    }
    if !r.is_empty() {
        return None;
    }
    // a/b = (va/la) / (cb·vb/lb) = q · lb / (la · cb · lead^k)
    let d = &cb * &pow(&lead, k);
    let n = norm(&d);
    let q: Vec<Zi> = q.iter().map(|x| x * d.conj() * Zi::new(lb.clone(), BigInt::zero())).collect();
    Some(join(&q, &(la * n)))
}

/// Primitive part and content.
fn primitive_with(mut v: Vec<Zi>) -> (Vec<Zi>, Zi) {
    trim(&mut v);
    let mut g = Zi::zero();
    for c in &v {
        g = zi_gcd(&g, c);
        if norm(&g).is_one() {
            return (v, Zi::one());
        }
    }
    if g.is_zero() {
        return (v, Zi::one());
    }
    let p = v.iter().map(|c| zi_div_exact(c, &g)).collect();
    (p, g)
}

/// `lc(b)^{δ+1} · a mod b` with `δ = deg a − deg b`.
fn pseudo_remainder(a: &[Zi], b: &[Zi]) -> Vec<Zi> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut scalings = a.len() - b.len() + 1;
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&lr * bc);
        }
        scalings -= 1;
        trim(&mut r);
    }
    let k = pow(lb, scalings);
    r.iter().map(|c| c * &k).collect()
}

fn pow(a: &Zi, e: usize) -> Zi {
    let mut acc = Zi::one();
    for _ in 0..e {
        acc = &acc * a;
    }
    acc
}

/// `998244353 = 119·2^23 + 1` is `1 mod 4`, so `i` lives in `F_P`.
const P: u64 = 998_244_353;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

fn reduce(v: &[Zi]) -> Vec<u64> {
    let p = BigInt::from(P);
    // 3 generates F_P^*, so 3^((P−1)/4) squares to −1.
    let i = pow_mod(3, (P - 1) / 4);
    let m = |x: &BigInt| -> u64 {
        let r = x.mod_floor(&p);
        r.iter_u64_digits().next().unwrap_or(0)
    };
    let mut out: Vec<u64> = v.iter().map(|c| (m(&c.re) + m(&c.im) * i % P) % P).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn degree_of_gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), P - 2);
        while a.len() >= b.len() {
            let c = a.last().unwrap() * inv % P;
            let s = a.len() - b.len();
            for (j, y) in b.iter().enumerate() {
                a[s + j] = (a[s + j] + P - c * y % P) % P;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Monic gcd of two polynomials over `Q(i)`.
pub(super) fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return UniPoly::one();
    }
    let (mut x, mut y) = (primitive(to_integral(a)), primitive(to_integral(b)));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    // When P divides neither leading coefficient, reduction mod P can only
    // raise the degree of the gcd, so a constant gcd mod P is conclusive.
    let (xp, yp) = (reduce(&x), reduce(&y));
    if xp.len() == x.len() && yp.len() == y.len() && degree_of_gcd_mod_p(xp, yp) == 0 {
        return UniPoly::one();
    }
    // Subresultant remainder sequence: the divisions by g·h^δ are exact and
    // keep coefficient growth linear without computing contents.
    let (mut g, mut h) = (Zi::one(), Zi::one());
    loop {
        let delta = x.len() - y.len();
        let r = pseudo_remainder(&x, &y);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return UniPoly::one();
        }
        let d = &g * &pow(&h, delta);
        x = std::mem::replace(&mut y, r.iter().map(|c| zi_div_exact(c, &d)).collect());
        g = x.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            zi_div_exact(&pow(&g, delta), &pow(&h, delta - 1))
        };
    }
    to_unipoly(&primitive(y)).monic()
}
