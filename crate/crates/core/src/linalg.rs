//! Exact integer linear algebra on small dense matrices.
//!
//! Everything here works over `i64` storage with `i128` intermediates and is
//! sized for the polytopes this crate handles (dimension at most a handful).

use num_integer::Integer;

/// Row-major dense integer matrix.
pub type Matrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &Matrix, x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(r, v)| r * v).sum())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[i64], k: i64) -> Vec<i64> {
    a.iter().map(|x| x * k).collect()
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides out the content of `v`. The zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = gcd_all(v);
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &Matrix) -> i64 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    i64::try_from(sign * m[n - 1][n - 1]).expect("determinant overflows i64")
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a - m[r][j] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| g.gcd(&x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Sum of the principal `k`-minors, i.e. the `k`-th elementary symmetric
/// function of the eigenvalues.
pub fn principal_minor_sum(a: &Matrix, k: usize) -> i64 {
    use itertools::Itertools;
    let n = a.len();
    if k == 0 {
        return 1;
    }
    if k > n {
        return 0;
    }
    (0..n)
        .combinations(k)
        .map(|idx| {
            let sub: Matrix = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| a[i][j]).collect())
                .collect();
            det(&sub)
        })
        .sum()
}

/// Adjugate matrix, so that `a * adjugate(a) = det(a) * I`.
pub fn adjugate(a: &Matrix) -> Matrix {
    let n = a.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Matrix = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| a[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = sign * det(&minor);
        }
    }
    adj
}

/// A lattice basis (as rows) of `{x in Z^n : a x = 0}`, where `a` has `n`
/// columns. The basis is returned in Hermite normal form.
pub fn integer_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let m = a.len();
    let mut work: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    // columns of `u` track the unimodular column operations
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut pivot = 0;
    for row in 0..m {
        if pivot == n {
            break;
        }
        for j in pivot + 1..n {
            if work[row][j] == 0 {
                continue;
            }
            let x = work[row][pivot];
            let y = work[row][j];
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let (p, q) = (-y / g, x / g);
            for r in work.iter_mut() {
                let (c1, c2) = (r[pivot], r[j]);
                r[pivot] = s * c1 + t * c2;
                r[j] = p * c1 + q * c2;
            }
            for r in u.iter_mut() {
                let (c1, c2) = (r[pivot], r[j]);
                r[pivot] = s * c1 + t * c2;
                r[j] = p * c1 + q * c2;
            }
        }
        if work[row][pivot] != 0 {
            pivot += 1;
        }
    }
    let basis: Vec<Vec<i64>> = (pivot..n)
        .map(|c| {
            (0..n)
                .map(|r| i64::try_from(u[r][c]).expect("kernel entry overflows i64"))
                .collect()
        })
        .collect();
    hermite_normal_form(&basis)
}

/// Row-style Hermite normal form of a matrix with linearly independent rows.
/// Pivots are positive and entries above each pivot are reduced into
/// `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        for i in r + 1..m.len() {
            while m[i][c] != 0 {
                if m[r][c] == 0 || m[i][c].abs() < m[r][c].abs() {
                    m.swap(r, i);
                    continue;
                }
                let q = m[i][c] / m[r][c];
                for j in 0..cols {
                    m[i][j] -= q * m[r][j];
                }
            }
        }
        if m[r][c] == 0 {
            continue;
        }
        if m[r][c] < 0 {
            m[r].iter_mut().for_each(|x| *x = -*x);
        }
        for i in 0..r {
            let q = Integer::div_floor(&m[i][c], &m[r][c]);
            if q != 0 {
                for j in 0..cols {
                    m[i][j] -= q * m[r][j];
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| i64::try_from(x).expect("HNF entry overflows i64"))
                .collect()
        })
        .collect()
}

/// Coordinates of `y` in a basis given in Hermite normal form, if `y` lies in
/// the lattice spanned by that basis.
pub fn coordinates_in_hnf(basis: &[Vec<i64>], y: &[i64]) -> Option<Vec<i64>> {
    let mut rest = y.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for b in basis {
        let pivot = b.iter().position(|&x| x != 0)?;
        if rest[pivot] % b[pivot] != 0 {
            return None;
        }
        let c = rest[pivot] / b[pivot];
        for (r, bi) in rest.iter_mut().zip(b) {
            *r -= c * bi;
        }
        coords.push(c);
    }
    rest.iter().all(|&x| x == 0).then_some(coords)
}
