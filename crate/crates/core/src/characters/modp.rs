//! Linear algebra over a prime field `F_p` with `p < 2^31`.

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least primitive root modulo the prime `p`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Least prime `p ≡ 1 (mod e)` with `p > 2·√order`.
pub(crate) fn choose_prime(exponent: u64, order: u64) -> u64 {
    let mut p = exponent + 1;
    while !(is_prime(p) && (p as u128) * (p as u128) > 4 * order as u128) {
        p += exponent;
    }
    p
}

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, i);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : a·x = 0}` for a square matrix `a`.
pub(crate) fn nullspace(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, Vec::len);
    let mut rows = a.to_vec();
    let pivots = rref(&mut rows, p);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; n];
        v[free] = 1;
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = (p - row[free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial `det(xI - a)`, constant term first, via
/// reduction to upper Hessenberg form.
pub(crate) fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for r in j + 2..n {
            let u = h[r][j] * inv % p;
            if u == 0 {
                continue;
            }
            for c in 0..n {
                h[r][c] = (h[r][c] + p - u * h[j + 1][c] % p) % p;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + u * row[r]) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        // (x - h[m-1][m-1]) · P_{m-1}
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - c * h[m - 1][m - 1] % p) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = t * h[m - i][m - i - 1] % p;
            let f = t * h[m - i - 1][m - 1] % p;
            if f == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                next[k] = (next[k] + p - f * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// All roots of `poly` in `F_p`, by exhaustive evaluation.
pub(crate) fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}
