//! Arithmetic modulo a word-sized prime.

use rand::Rng;

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

/// Deterministic Miller–Rabin; these bases are exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &b in &BASES {
        let mut x = pow(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A uniformly drawn odd candidate in `[2^61, 2^62)`, advanced to the next prime.
pub fn random_prime(rng: &mut impl Rng) -> u64 {
    let mut p = rng.gen_range(1u64 << 61..1u64 << 62) | 1;
    while !is_prime(p) {
        p += 2;
    }
    p
}

/// Rank of a dense matrix over GF(p), by row reduction. Consumes the rows.
pub fn rank(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let scale = inv(rows[rank][col], p);
        for x in rows[rank][col..].iter_mut() {
            *x = mul(*x, scale, p);
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = (*x + p - mul(f, y, p)) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let p = random_prime(&mut rng);
        assert!((1u64 << 61..1u64 << 62).contains(&p));
        assert_eq!(pow(3, p - 1, p), 1);
    }

    #[test]
    fn small_ranks() {
        let p = 101;
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]], 2, p), 1);
        assert_eq!(rank(vec![vec![1, 2], vec![3, 4]], 2, p), 2);
        assert_eq!(rank(vec![vec![0, 0, 0]], 3, p), 0);
        // Singular only modulo 5.
        assert_eq!(rank(vec![vec![1, 2], vec![3, 1]], 2, 5), 1);
    }
}
