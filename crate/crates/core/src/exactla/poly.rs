//! Univariate polynomials as ascending coefficient vectors, with the few
//! operations needed for eigenvalue extraction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactla::Matrix;
use crate::field::{Field, PrimeField};

pub fn trim<F: Field>(f: &F, p: &mut Vec<F::Elem>) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

/// Degree, with `None` for the zero polynomial.
pub fn degree<F: Field>(f: &F, p: &[F::Elem]) -> Option<usize> {
    p.iter().rposition(|c| !f.is_zero(c))
}

pub fn eval<F: Field>(f: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let mut out: Vec<F::Elem> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
            f.sub(&x, &y)
        })
        .collect();
    trim(f, &mut out);
    out
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(f, b).expect("polynomial division by zero");
    let lead_inv = f.inv(&b[db]).unwrap();
    let mut r = a.to_vec();
    trim(f, &mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(f, &r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (i, y) in b[..=db].iter().enumerate() {
            r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, y));
        }
        q[shift] = c;
        r.truncate(dr);
        trim(f, &mut r);
    }
    trim(f, &mut q);
    (q, r)
}

pub fn monic<F: Field>(f: &F, p: &mut [F::Elem]) {
    if let Some(d) = degree(f, p) {
        let inv = f.inv(&p[d]).unwrap();
        for c in p.iter_mut() {
            *c = f.mul(c, &inv);
        }
    }
}

/// Monic gcd.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &mut x);
    x
}

fn powmod<F: Field>(f: &F, base: &[F::Elem], mut e: u64, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut acc = vec![f.one()];
    let mut b = divrem(f, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(f, &mul(f, &acc, &b), m).1;
        }
        b = divrem(f, &mul(f, &b, &b), m).1;
        e >>= 1;
    }
    acc
}

/// Characteristic polynomial `det(xI - m)`, monic, via reduction to upper
/// Hessenberg form.
pub fn charpoly<F: Field>(m: &Matrix<F>) -> Vec<F::Elem> {
    assert!(m.is_square());
    let f = m.field().clone();
    let n = m.rows();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !f.is_zero(h.get(i, j))) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                let a = h.get(piv, c).clone();
                let b = h.get(j + 1, c).clone();
                h.set(piv, c, b);
                h.set(j + 1, c, a);
            }
            for r in 0..n {
                let a = h.get(r, piv).clone();
                let b = h.get(r, j + 1).clone();
                h.set(r, piv, b);
                h.set(r, j + 1, a);
            }
        }
        let pinv = f.inv(h.get(j + 1, j)).unwrap();
        for r in j + 2..n {
            let t = f.mul(h.get(r, j), &pinv);
            if f.is_zero(&t) {
                continue;
            }
            for c in 0..n {
                let v = f.sub(h.get(r, c), &f.mul(&t, h.get(j + 1, c)));
                h.set(r, c, v);
            }
            for rr in 0..n {
                let v = f.add(h.get(rr, j + 1), &f.mul(&t, h.get(rr, r)));
                h.set(rr, j + 1, v);
            }
        }
    }
    // p[k] = char poly of the leading k x k block
    let mut p: Vec<Vec<F::Elem>> = vec![vec![f.one()]];
    for k in 0..n {
        let x_minus = vec![f.neg(h.get(k, k)), f.one()];
        let mut next = mul(&f, &x_minus, &p[k]);
        let mut prod = f.one();
        for i in (0..k).rev() {
            prod = f.mul(&prod, h.get(i + 1, i));
            let c = f.mul(h.get(i, k), &prod);
            if !f.is_zero(&c) {
                let term: Vec<F::Elem> = p[i].iter().map(|a| f.mul(a, &c)).collect();
                next = sub(&f, &next, &term);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Distinct roots in `GF(p)`, sorted.
pub fn roots_prime_field(f: &PrimeField, poly: &[u64]) -> Vec<u64> {
    let mut a = poly.to_vec();
    trim(f, &mut a);
    if a.len() <= 1 {
        return Vec::new();
    }
    let p = f.modulus();
    if p <= 4096 {
        return (0..p).filter(|x| f.is_zero(&eval(f, &a, x))).collect();
    }
    let mut roots = Vec::new();
    if a[0] == 0 {
        roots.push(0);
        while a[0] == 0 {
            a.remove(0);
        }
    }
    // product of the distinct linear factors
    let xp = powmod(f, &[0, 1], p, &a);
    let g = gcd(f, &a, &sub(f, &xp, &[0, 1]));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    split_linear(f, g, &mut rng, &mut roots);
    roots.sort_unstable();
    roots.dedup();
    roots
}

fn split_linear(f: &PrimeField, g: Vec<u64>, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let Some(d) = degree(f, &g) else { return };
    match d {
        0 => {}
        1 => out.push(f.neg(&f.div(&g[0], &g[1]))),
        _ => {
            let e = (f.modulus() - 1) / 2;
            loop {
                let a = f.random(rng);
                let h = powmod(f, &[a, 1], e, &g);
                let h = sub(f, &h, &[1]);
                let c = gcd(f, &g, &h);
                let dc = degree(f, &c).unwrap_or(0);
                if dc > 0 && dc < d {
                    let (q, _) = divrem(f, &g, &c);
                    split_linear(f, c, rng, out);
                    split_linear(f, q, rng, out);
                    return;
                }
            }
        }
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Positive divisors of `n`, or `None` when `n` is too large to factor by
/// trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs().to_u64()?;
    if m == 0 {
        return None;
    }
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut d = 2u64;
    while d * d <= m && d <= TRIAL_LIMIT {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        if m > TRIAL_LIMIT * TRIAL_LIMIT {
            return None;
        }
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (q, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for x in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pw);
                pw *= q;
            }
        }
        divs = next;
    }
    Some(divs)
}

/// Distinct rational roots by the rational root theorem. Coefficients whose
/// size defeats trial division yield only the root 0 if present.
pub fn roots_rational(poly: &[BigRational]) -> Vec<BigRational> {
    let mut a: Vec<BigRational> = poly.to_vec();
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    if a[0].is_zero() {
        roots.push(BigRational::zero());
        while a[0].is_zero() {
            a.remove(0);
        }
    }
    if a.len() > 1 {
        let l = a.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = a.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
        if let (Some(num), Some(den)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) {
            for pn in &num {
                for qd in &den {
                    for sign in [1, -1] {
                        let r = BigRational::new(pn * sign, qd.clone());
                        if r.denom() != qd && !qd.is_one() {
                            continue;
                        }
                        let v = a.iter().rev().fold(BigRational::zero(), |acc, c| acc * &r + c);
                        if v.is_zero() && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn brute_det<F: Field>(f: &F, m: &Matrix<F>, x: &F::Elem) -> F::Elem {
        // det(xI - m) by cofactor expansion, fine for tiny sizes
        fn det<F: Field>(f: &F, a: &Vec<Vec<F::Elem>>) -> F::Elem {
            let n = a.len();
            if n == 0 {
                return f.one();
            }
            let mut acc = f.zero();
            for c in 0..n {
                let minor: Vec<Vec<F::Elem>> =
                    a[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect()).collect();
                let t = f.mul(&a[0][c], &det(f, &minor));
                acc = if c % 2 == 0 { f.add(&acc, &t) } else { f.sub(&acc, &t) };
            }
            acc
        }
        let n = m.rows();
        let a: Vec<Vec<F::Elem>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let d = if r == c { x.clone() } else { f.zero() };
                        f.sub(&d, m.get(r, c))
                    })
                    .collect()
            })
            .collect();
        det(f, &a)
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        let f = PrimeField::new(101).unwrap();
        let m = Matrix::from_i64_rows(&f, &[&[0, 2, 1, 5], &[3, 1, 0, 0], &[4, 0, 0, 7], &[1, 1, 2, 9]]);
        let cp = charpoly(&m);
        assert_eq!(cp.len(), 5);
        for x in 0..20u64 {
            assert_eq!(eval(&f, &cp, &x), brute_det(&f, &m, &x));
        }
    }

    #[test]
    fn prime_roots_large_field() {
        let f = PrimeField::default();
        // (x - 3)(x - 7)^2 (x^2 + 1) ; -1 is a non-residue mod 32003
        let p = mul(&f, &mul(&f, &[f.from_i64(-3), 1], &mul(&f, &[f.from_i64(-7), 1], &[f.from_i64(-7), 1])), &[1, 0, 1]);
        assert_eq!(roots_prime_field(&f, &p), vec![3, 7]);
        assert_eq!(roots_prime_field(&f, &[0, 0, 1]), vec![0]);
    }

    #[test]
    fn rational_roots() {
        let q = Rationals;
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let p = vec![q.from_i64(-3), q.from_i64(5), q.from_i64(2)];
        let r = roots_rational(&p);
        assert_eq!(r, vec![q.from_i64(-3), BigRational::new(1.into(), 2.into())]);
        assert!(roots_rational(&[q.from_i64(1), q.zero(), q.from_i64(1)]).is_empty());
    }
}
