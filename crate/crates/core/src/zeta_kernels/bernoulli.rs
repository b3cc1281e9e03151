use std::sync::OnceLock;

/// B_{2k} for k = 1..=14 as exact rationals (numerator, denominator).
const BERNOULLI_EVEN: [(f64, f64); 14] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
];

/// Largest correction order available from [`scaled_even_bernoulli`].
pub const MAX_ORDER: usize = BERNOULLI_EVEN.len();

/// `B_{2k} / (2k)!` for `k = 1..=MAX_ORDER` (index `k - 1`).
pub fn scaled_even_bernoulli() -> &'static [f64; MAX_ORDER] {
    static TABLE: OnceLock<[f64; MAX_ORDER]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; MAX_ORDER];
        let mut factorial = 1.0f64;
        for k in 1..=MAX_ORDER {
            factorial *= ((2 * k - 1) * (2 * k)) as f64;
            let (num, den) = BERNOULLI_EVEN[k - 1];
            out[k - 1] = num / den / factorial;
        }
        out
    })
}
