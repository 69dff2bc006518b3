//! Factorization into irreducibles over `Q[x]`.
//!
//! Pipeline: Yun's square-free decomposition, then for each square-free part
//! a Zassenhaus round: Berlekamp factorization modulo a good small prime,
//! quadratic Hensel lifting past the Landau-Mignotte bound, and subset
//! recombination with exact trial division over the integers.

use crate::error::{Error, Result};
use crate::rings::poly::UniPoly;
use crate::rings::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Monic irreducible factors of `f` with multiplicities, sorted by
/// (degree, coefficients). The unit in front is dropped. Errors on zero.
pub fn factor(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let mut out: Vec<(UniPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic())? {
        for g in factor_squarefree(&part)? {
            out.push((g, mult));
        }
    }
    out.sort();
    Ok(out)
}

/// Yun's algorithm: `f = prod part_i^i` with the parts square-free, coprime
/// and monic.
pub fn squarefree_decomposition(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    let f = f.monic();
    let df = f.derivative();
    let a = f.gcd(&df)?;
    let mut b = f.exact_div(&a)?;
    let mut c = df.exact_div(&a)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    while !b.is_constant() {
        let p = b.gcd(&d)?;
        if !p.is_constant() {
            out.push((p.clone(), i));
        }
        b = b.exact_div(&p)?;
        c = d.exact_div(&p)?;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Factor a square-free monic rational polynomial into monic irreducibles.
fn factor_squarefree(f: &UniPoly) -> Result<Vec<UniPoly>> {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg == 1 {
        return Ok(vec![f.monic()]);
    }
    // Work with a primitive integer model; monicize so Hensel lifting can
    // assume monic everywhere: H(y) = c^(n-1) h(y/c) for c = lc(h).
    let h = f.primitive_integer_coeffs();
    let c = h.last().unwrap().clone();
    let n = h.len() - 1;
    let mut monic: Vec<BigInt> = Vec::with_capacity(n + 1);
    for (i, a) in h.iter().enumerate() {
        // coefficient of y^i in c^(n-1) h(y/c) is a_i c^(n-1-i); leading is 1
        if i == n {
            monic.push(BigInt::one());
        } else {
            monic.push(a * c.pow((n - 1 - i) as u32));
        }
    }
    let factors = zassenhaus_monic(&monic);
    // Map back through y = c x and normalize monic over Q.
    let cq = Rational::from_integer(c);
    let mut out = Vec::new();
    for g in factors {
        let coeffs: Vec<Rational> = g
            .iter()
            .enumerate()
            .map(|(i, a)| Rational::from_integer(a.clone()) * cq.pow(i as i32))
            .collect();
        out.push(UniPoly::new(coeffs).monic());
    }
    out.sort();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Integer polynomials, little-endian, trimmed.

type ZPoly = Vec<BigInt>;

fn zp_trim(mut p: ZPoly) -> ZPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn zp_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_trim(out)
}

fn zp_sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x - y);
    }
    zp_trim(out)
}

fn zp_mod(p: &[BigInt], m: &BigInt) -> ZPoly {
    zp_trim(p.iter().map(|c| c.mod_floor(m)).collect())
}

/// Division with remainder by a monic divisor, with coefficients reduced
/// modulo `m` at every step.
fn zp_divrem_monic_mod(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    assert!(d.last().map_or(false, |c| c.is_one()), "divisor not monic");
    let dd = d.len() - 1;
    let mut rem: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap().clone();
        if !c.is_zero() {
            for i in 0..=dd {
                rem[k + i] = (&rem[k + i] - &c * &d[i]).mod_floor(m);
            }
            quot[k] = c;
        }
        rem.pop();
    }
    (zp_trim(quot), zp_trim(rem))
}

use num_integer::Integer;

/// Symmetric representative in (-m/2, m/2].
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zp_symmetric(p: &[BigInt], m: &BigInt) -> ZPoly {
    zp_trim(p.iter().map(|c| symmetric(c, m)).collect())
}

/// Exact division test over the integers for a monic candidate divisor.
fn zp_divides_exact(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    if g.is_empty() || f.len() < g.len() {
        return None;
    }
    assert!(g.last().unwrap().is_one());
    let dd = g.len() - 1;
    let mut rem: Vec<BigInt> = f.to_vec();
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap().clone();
        if !c.is_zero() {
            for i in 0..=dd {
                let t = &c * &g[i];
                rem[k + i] -= t;
            }
            quot[k] = c;
        }
        rem.pop();
    }
    if zp_trim(rem).is_empty() {
        Some(zp_trim(quot))
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for small primes.

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283,
];

type FpPoly = Vec<u64>;

fn fp_trim(mut p: FpPoly) -> FpPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // p is prime; Fermat.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &[u64], d: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let dd = d.len() - 1;
    let lc_inv = fp_inv(d[dd], p);
    let mut rem: Vec<u64> = fp_trim(a.to_vec());
    let mut quot = vec![0u64; rem.len().saturating_sub(dd)];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap() * lc_inv % p;
        if c != 0 {
            for i in 0..=dd {
                let sub = c * d[i] % p;
                rem[k + i] = (rem[k + i] + p - sub) % p;
            }
            quot[k] = c;
        }
        rem.pop();
    }
    (fp_trim(quot), fp_trim(rem))
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut r0 = fp_trim(a.to_vec());
    let mut r1 = fp_trim(b.to_vec());
    while !r1.is_empty() {
        let (_, r) = fp_divrem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    if r0.is_empty() {
        return r0;
    }
    let inv = fp_inv(*r0.last().unwrap(), p);
    fp_trim(r0.into_iter().map(|c| c * inv % p).collect())
}

fn fp_derivative(a: &[u64], p: u64) -> FpPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    fp_trim(
        a[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * ((i as u64 + 1) % p) % p)
            .collect(),
    )
}

fn fp_pow_mod(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> FpPoly {
    let mut acc = vec![1u64];
    let mut b = fp_divrem(base, modulus, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_divrem(&fp_mul(&acc, &b, p), modulus, p).1;
        }
        e >>= 1;
        if e > 0 {
            b = fp_divrem(&fp_mul(&b, &b, p), modulus, p).1;
        }
    }
    acc
}

/// Berlekamp factorization of a monic square-free polynomial over F_p.
/// Deterministic: splits with every constant c in F_p.
fn berlekamp(f: &[u64], p: u64) -> Vec<FpPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // Matrix of the Frobenius v -> v^p mod f in the basis 1, x, .., x^(n-1).
    let mut cols: Vec<FpPoly> = Vec::with_capacity(n);
    let xp = fp_pow_mod(&[0, 1], p, f, p);
    let mut cur = vec![1u64];
    for j in 0..n {
        if j > 0 {
            cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
        }
        cols.push(cur.clone());
    }
    // Null space of (M - I) over F_p, column-major M.
    let mut mat = vec![vec![0u64; n]; n];
    for (j, col) in cols.iter().enumerate() {
        for (i, &c) in col.iter().enumerate() {
            mat[i][j] = c;
        }
        mat[j][j] = (mat[j][j] + p - 1) % p;
    }
    let basis = fp_nullspace(&mut mat, n, p);
    let r = basis.len();
    let mut factors: Vec<FpPoly> = vec![f.to_vec()];
    if r == 1 {
        return factors;
    }
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let vp = fp_trim(v.clone());
        if vp.len() <= 1 {
            continue; // constants split nothing
        }
        let mut next: Vec<FpPoly> = Vec::new();
        for u in factors.into_iter() {
            if u.len() - 1 <= 1 {
                next.push(u);
                continue;
            }
            let mut pieces = vec![u];
            for c in 0..p {
                let mut shifted = vp.clone();
                if shifted.is_empty() {
                    shifted = vec![0];
                }
                shifted[0] = (shifted[0] + p - c) % p;
                let shifted = fp_trim(shifted);
                let mut new_pieces = Vec::new();
                for piece in pieces.into_iter() {
                    if piece.len() - 1 <= 1 || shifted.is_empty() {
                        new_pieces.push(piece);
                        continue;
                    }
                    let g = fp_gcd(&piece, &shifted, p);
                    if g.len() > 1 && g.len() < piece.len() {
                        let (q, _) = fp_divrem(&piece, &g, p);
                        let lcq = fp_inv(*q.last().unwrap(), p);
                        new_pieces.push(fp_trim(q.iter().map(|c| c * lcq % p).collect()));
                        new_pieces.push(g);
                    } else {
                        new_pieces.push(piece);
                    }
                }
                pieces = new_pieces;
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors.sort();
    factors
}

/// Null space basis over F_p via Gauss-Jordan; vectors as coefficient rows.
fn fp_nullspace(mat: &mut [Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        let mut pr = None;
        for r in row..n {
            if mat[r][col] != 0 {
                pr = Some(r);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        mat.swap(row, pr);
        let inv = fp_inv(mat[row][col], p);
        for c in 0..n {
            mat[row][c] = mat[row][c] * inv % p;
        }
        for r in 0..n {
            if r != row && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in 0..n {
                    mat[r][c] = (mat[r][c] + p - factor * mat[row][c] % p) % p;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let mut basis = Vec::new();
    for col in 0..n {
        if pivot_of_col[col].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[col] = 1;
        for c in 0..n {
            if let Some(r) = pivot_of_col[c] {
                v[c] = (p - mat[r][col]) % p;
            }
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Hensel lifting.

/// Quadratic lift of a two-factor decomposition of a monic integer
/// polynomial: from (g, h, s, t) valid mod m to mod m^2.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zp_mod(&zp_sub(f, &zp_mul(g, h)), &m2);
    let (q, r) = zp_divrem_monic_mod(&zp_mul(s, &e), h, &m2);
    let g1 = zp_mod(
        &zp_trim({
            let mut v = zp_mul(t, &e);
            let qg = zp_mul(&q, g);
            let n = v.len().max(qg.len()).max(g.len());
            v.resize(n, BigInt::zero());
            for (i, c) in qg.iter().enumerate() {
                v[i] += c;
            }
            for (i, c) in g.iter().enumerate() {
                v[i] += c;
            }
            v
        }),
        &m2,
    );
    let h1 = zp_mod(
        &zp_trim({
            let mut v = r;
            let n = v.len().max(h.len());
            v.resize(n, BigInt::zero());
            for (i, c) in h.iter().enumerate() {
                v[i] += c;
            }
            v
        }),
        &m2,
    );
    // lift the Bezout pair
    let b = zp_mod(
        &zp_sub(
            &{
                let mut v = zp_mul(s, &g1);
                let th = zp_mul(t, &h1);
                let n = v.len().max(th.len());
                v.resize(n, BigInt::zero());
                for (i, c) in th.iter().enumerate() {
                    v[i] += c;
                }
                zp_trim(v)
            },
            &[BigInt::one()],
        ),
        &m2,
    );
    let (c, d) = zp_divrem_monic_mod(&zp_mul(s, &b), &h1, &m2);
    let s1 = zp_mod(&zp_sub(s, &d), &m2);
    let t1 = zp_mod(&zp_sub(&zp_sub(t, &zp_mul(t, &b)), &zp_mul(&c, &g1)), &m2);
    (g1, h1, s1, t1)
}

/// Lift a multi-factor decomposition mod p of monic `f` to modulus `target`
/// (a power of p), by recursive two-way splitting.
fn hensel_tree(f: &[BigInt], factors: &[FpPoly], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![zp_mod(f, target)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let gp = left
        .iter()
        .fold(vec![1u64], |acc, x| fp_mul(&acc, x, p));
    let hp = right
        .iter()
        .fold(vec![1u64], |acc, x| fp_mul(&acc, x, p));
    // Bezout mod p.
    let (s0, t0) = fp_bezout(&gp, &hp, p);
    let to_z = |v: &[u64]| -> ZPoly { zp_trim(v.iter().map(|&c| BigInt::from(c)).collect()) };
    let mut g = to_z(&gp);
    let mut h = to_z(&hp);
    let mut s = to_z(&s0);
    let mut t = to_z(&t0);
    let mut m = BigInt::from(p);
    while &m < target {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let g = zp_mod(&g, target);
    let h = zp_mod(&h, target);
    let mut out = hensel_tree(&g, left, p, target);
    out.extend(hensel_tree(&h, right, p, target));
    out
}

fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let mut r0 = fp_trim(a.to_vec());
    let mut r1 = fp_trim(b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::<u64>::new());
    let (mut t0, mut t1) = (Vec::<u64>::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let sub = |x0: &FpPoly, x1: &FpPoly| -> FpPoly {
            let qx = fp_mul(&q, x1, p);
            let n = x0.len().max(qx.len());
            let mut v = vec![0u64; n];
            for i in 0..n {
                let a = x0.get(i).copied().unwrap_or(0);
                let b = qx.get(i).copied().unwrap_or(0);
                v[i] = (a + p - b) % p;
            }
            fp_trim(v)
        };
        let s = sub(&s0, &s1);
        let t = sub(&t0, &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    // normalize gcd to 1 (inputs are coprime)
    let inv = fp_inv(*r0.last().unwrap(), p);
    let scale = |v: &FpPoly| fp_trim(v.iter().map(|&c| c * inv % p).collect());
    (scale(&s0), scale(&t0))
}

// ---------------------------------------------------------------------------
// Zassenhaus driver.

/// Factor a monic square-free integer polynomial into monic integer
/// irreducibles.
fn zassenhaus_monic(f: &[BigInt]) -> Vec<ZPoly> {
    let f = zp_trim(f.to_vec());
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    // Choose a prime where f stays square-free.
    let mut chosen = None;
    'outer: for &p in PRIMES {
        let fp: FpPoly = fp_trim(
            f.iter()
                .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
                .collect(),
        );
        if fp.len() != f.len() {
            continue; // leading coefficient vanished (cannot happen: monic)
        }
        let d = fp_derivative(&fp, p);
        if d.is_empty() {
            continue 'outer;
        }
        let g = fp_gcd(&fp, &d, p);
        if g.len() == 1 {
            chosen = Some((p, fp));
            break;
        }
    }
    let (p, fp) = chosen.expect("no good prime found for square-free integer polynomial");
    let modular = berlekamp(&fp, p);
    if modular.len() == 1 {
        return vec![f];
    }
    // Landau-Mignotte style bound on coefficients of monic factors.
    let height = f.iter().map(|c| c.abs()).max().unwrap();
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum::<BigInt>() + &height;
    let bound: BigInt = (BigInt::one() << (n + 2)) * norm1;
    let mut target = BigInt::from(p);
    while target <= &bound * 2 {
        target = &target * p;
    }
    let lifted = hensel_tree(&zp_mod(&f, &target), &modular, p, &target);
    recombine(&f, lifted, &target)
}

fn recombine(f: &[BigInt], mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut remaining = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= lifted.len() {
        let mut found = None;
        'subsets: for combo in subsets(lifted.len(), size) {
            let mut prod = vec![BigInt::one()];
            for &i in &combo {
                prod = zp_mod(&zp_mul(&prod, &lifted[i]), modulus);
            }
            let cand = zp_symmetric(&prod, modulus);
            if let Some(q) = zp_divides_exact(&remaining, &cand) {
                found = Some((combo, cand, q));
                break 'subsets;
            }
        }
        match found {
            Some((combo, cand, q)) => {
                out.push(cand);
                remaining = q;
                let keep: Vec<ZPoly> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                lifted = keep;
            }
            None => size += 1,
        }
    }
    if remaining.len() > 1 {
        out.push(remaining);
    }
    out
}

/// All size-k index subsets of 0..n, lexicographic.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The distinct rational roots of `f`, via the linear irreducible factors.
pub fn rational_roots(f: &UniPoly) -> Result<Vec<Rational>> {
    let mut roots = Vec::new();
    for (g, _) in factor(f)? {
        if g.degree() == Some(1) {
            roots.push(-g.coeff(0));
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rational::{rat, rat_int};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64_coeffs(coeffs)
    }

    fn check_product(f: &UniPoly) {
        let factors = factor(f).unwrap();
        let mut prod = UniPoly::constant(f.leading_coeff().unwrap().clone());
        for (g, m) in &factors {
            assert!(g.is_monic());
            assert!(g.degree().unwrap_or(0) >= 1);
            prod = &prod * &g.pow(*m);
        }
        assert_eq!(&prod, f, "factorization of {} does not multiply back", f);
    }

    #[test]
    fn linear_products() {
        let f = &(&p(&[-1, 1]) * &p(&[2, 1])) * &p(&[-3, 2]);
        let factors = factor(&f).unwrap();
        assert_eq!(factors.len(), 3);
        check_product(&f);
        let roots = rational_roots(&f).unwrap();
        assert_eq!(roots, vec![rat_int(-2), rat_int(1), rat(3, 2)]);
    }

    #[test]
    fn quadratic_pairs() {
        // (x^2+1)(x^2+2): both irreducible, no rational roots
        let f = &p(&[1, 0, 1]) * &p(&[2, 0, 1]);
        let factors = factor(&f).unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0, p(&[1, 0, 1]));
        assert_eq!(factors[1].0, p(&[2, 0, 1]));
    }

    #[test]
    fn sophie_germain_split() {
        // x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
        let f = p(&[4, 0, 0, 0, 1]);
        let factors = factor(&f).unwrap();
        assert_eq!(factors.len(), 2);
        check_product(&f);
        for (g, _) in &factors {
            assert_eq!(g.degree(), Some(2));
        }
    }

    #[test]
    fn irreducible_quartics() {
        // x^4+1 and the Swinnerton-Dyer quartic x^4-10x^2+1 factor modulo
        // every prime; recombination must reassemble them.
        for f in [p(&[1, 0, 0, 0, 1]), p(&[1, 0, -10, 0, 1])] {
            let factors = factor(&f).unwrap();
            assert_eq!(factors.len(), 1, "{} should be irreducible", f);
            assert_eq!(factors[0], (f.clone(), 1));
        }
    }

    #[test]
    fn multiplicities() {
        // (x-1)^3 (x^2+1)^2
        let f = &p(&[-1, 1]).pow(3) * &p(&[1, 0, 1]).pow(2);
        let factors = factor(&f).unwrap();
        assert_eq!(
            factors,
            vec![(p(&[-1, 1]), 3), (p(&[1, 0, 1]), 2)]
        );
        check_product(&f);
    }

    #[test]
    fn non_monic_rational_input() {
        // 6x^2 - x - 2 = (2x+1)(3x-2), normalized monic
        let f = p(&[-2, -1, 6]);
        let factors = factor(&f).unwrap();
        assert_eq!(factors.len(), 2);
        let roots = rational_roots(&f).unwrap();
        assert_eq!(roots, vec![rat(-1, 2), rat(2, 3)]);
    }

    #[test]
    fn cyclotomic_like() {
        // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let f = p(&[-1, 0, 0, 0, 0, 0, 1]);
        let factors = factor(&f).unwrap();
        assert_eq!(factors.len(), 4);
        check_product(&f);
    }

    #[test]
    fn constants_and_degree_one() {
        assert!(factor(&UniPoly::constant(rat_int(5))).unwrap().is_empty());
        assert_eq!(factor(&p(&[3, 2])).unwrap(), vec![(p(&[3, 2]).monic(), 1)]);
        assert!(factor(&UniPoly::zero()).is_err());
    }

    #[test]
    fn larger_mixed_product() {
        let f = &(&p(&[1, 1]).pow(2) * &p(&[1, 0, 0, 1])) * &p(&[7, -1, 1]);
        check_product(&f);
        // x^3+1 = (x+1)(x^2-x+1), so (x+1) total multiplicity 3
        let factors = factor(&f).unwrap();
        let m: u32 = factors
            .iter()
            .filter(|(g, _)| *g == p(&[1, 1]))
            .map(|(_, m)| *m)
            .sum();
        assert_eq!(m, 3);
    }
}
