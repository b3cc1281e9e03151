//! Prime sieves and small multiplicative-function helpers.

/// Sieve of Eratosthenes; returns all primes `<= n` in increasing order.
pub fn primes_up_to(n: usize) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    if count == 0 {
        return Vec::new();
    }
    // p_n < n (ln n + ln ln n) for n >= 6
    let n = count.max(6) as f64;
    let bound = (n * (n.ln() + n.ln().ln())).ceil() as usize + 10;
    let mut ps = primes_up_to(bound);
    ps.truncate(count);
    ps
}

/// Prime counting function pi(x).
pub fn prime_pi(x: f64) -> usize {
    if x < 2.0 {
        return 0;
    }
    primes_up_to(x.floor() as usize).len()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest-prime-factor table for `0..=n`.
///
/// Entries store the smallest prime factor when it is at most `sqrt(n)`, and
/// `0` when the number itself is prime (or 0/1). That keeps the table in `u32`
/// regardless of `n`.
#[derive(Debug, Clone)]
pub struct FactorSieve {
    spf: Vec<u32>,
}

impl FactorSieve {
    pub fn new(n: usize) -> Self {
        let mut spf = vec![0u32; n + 1];
        let mut i = 2usize;
        while i * i <= n {
            if spf[i] == 0 {
                let mut j = i * i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
            i += 1;
        }
        FactorSieve { spf }
    }

    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    /// Smallest prime factor of `m >= 2`.
    #[inline]
    pub fn smallest_factor(&self, m: usize) -> usize {
        match self.spf[m] {
            0 => m,
            p => p as usize,
        }
    }

    /// Prime-power factorization `[(p, e), ...]` in increasing `p`.
    pub fn factorize(&self, mut m: usize) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = Vec::new();
        while m > 1 {
            let p = self.smallest_factor(m);
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        out
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(prime_pi(100.0), 25);
        assert_eq!(prime_pi(1000.0), 168);
        assert_eq!(first_primes(5), vec![2, 3, 5, 7, 11]);
        assert_eq!(*first_primes(1000).last().unwrap(), 7919);
    }

    #[test]
    fn sieve_factorizes() {
        let s = FactorSieve::new(20_000);
        assert_eq!(s.factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(s.factorize(9973), vec![(9973, 1)]);
        assert_eq!(s.factorize(2 * 9973), vec![(2, 1), (9973, 1)]);
        for m in 2..2000usize {
            let prod: usize = s.factorize(m).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, m);
        }
    }

    #[test]
    fn lcm_gcd() {
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(gcd(17, 5), 1);
    }
}
