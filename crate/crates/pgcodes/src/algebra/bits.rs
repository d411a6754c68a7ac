//! Bit-packed linear algebra over GF(2).
//!
//! A vector of length `N <= 64` is a `u64` whose bit `N - 1 - j` holds
//! coordinate `j`, so integer order on rows is lexicographic order on vectors.

/// Packs a 0/1 slice into a word.
#[inline]
pub fn pack(v: &[u32]) -> u64 {
    v.iter().fold(0u64, |acc, &b| (acc << 1) | (b & 1) as u64)
}

/// Unpacks a word into `n` coordinates.
#[inline]
pub fn unpack(w: u64, n: usize) -> impl Iterator<Item = u32> {
    (0..n).map(move |j| ((w >> (n - 1 - j)) & 1) as u32)
}

/// Rank of a set of packed rows (destroys the input order).
#[inline]
pub fn rank(rows: &mut [u64]) -> usize {
    let mut r = 0;
    for i in 0..rows.len() {
        let mut best = i;
        for j in i..rows.len() {
            if rows[j] > rows[best] {
                best = j;
            }
        }
        rows.swap(i, best);
        let top = rows[i];
        if top == 0 {
            break;
        }
        r += 1;
        let hb = 63 - top.leading_zeros();
        for row in rows.iter_mut().skip(i + 1) {
            if (*row >> hb) & 1 == 1 {
                *row ^= top;
            }
        }
    }
    r
}

/// Rank of a basis of at most 16 packed rows without allocating.
#[inline]
pub fn rank_of(rows: &[u64]) -> usize {
    let mut buf = [0u64; 16];
    let n = rows.len().min(16);
    buf[..n].copy_from_slice(&rows[..n]);
    let mut basis = [0u64; 64];
    let mut r = 0;
    for &row in &buf[..n] {
        let mut v = row;
        while v != 0 {
            let hb = 63 - v.leading_zeros() as usize;
            if basis[hb] == 0 {
                basis[hb] = v;
                r += 1;
                break;
            }
            v ^= basis[hb];
        }
    }
    r
}

/// Reduced row-echelon form of packed rows, descending by pivot position
/// (lexicographic order of the first nonzero coordinate). Zero rows removed.
pub fn rref(rows: &[u64]) -> alloc::vec::Vec<u64> {
    let mut basis = [0u64; 64];
    for &row in rows {
        let mut v = row;
        while v != 0 {
            let hb = 63 - v.leading_zeros() as usize;
            if basis[hb] == 0 {
                basis[hb] = v;
                break;
            }
            v ^= basis[hb];
        }
    }
    let mut out = alloc::vec::Vec::new();
    for hb in (0..64).rev() {
        if basis[hb] == 0 {
            continue;
        }
        let mut v = basis[hb];
        for lower in (0..hb).rev() {
            if basis[lower] != 0 && (v >> lower) & 1 == 1 {
                v ^= basis[lower];
            }
        }
        basis[hb] = v;
        out.push(v);
    }
    out
}

/// Rank of an `n x n` matrix stored row-major in the low `n*n` bits of `m`
/// (entry `(i, j)` at bit `n*n - 1 - (i*n + j)`).
#[inline]
pub fn square_rank(m: u64, n: usize) -> usize {
    let mask = (1u64 << n) - 1;
    let mut rows = [0u64; 8];
    for (i, slot) in rows.iter_mut().enumerate().take(n) {
        *slot = (m >> ((n - 1 - i) * n)) & mask;
    }
    rank_of(&rows[..n])
}

/// Rank of the stacked pair of packed bases.
#[inline]
pub fn joint_rank(a: &[u64], b: &[u64]) -> usize {
    let mut basis = [0u64; 64];
    let mut r = 0;
    for &row in a.iter().chain(b) {
        let mut v = row;
        while v != 0 {
            let hb = 63 - v.leading_zeros() as usize;
            if basis[hb] == 0 {
                basis[hb] = v;
                r += 1;
                break;
            }
            v ^= basis[hb];
        }
    }
    r
}
