use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A few random shears, one sign flip or swap: small entries, determinant ±1.
pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..3 {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            for r in m.iter_mut() {
                r[i] = -r[i];
            }
        } else {
            let k = rng.gen_range(-2..=2);
            for r in m.iter_mut() {
                r[j] += k * r[i];
            }
        }
    }
    let i = rng.gen_range(0..n);
    let j = rng.gen_range(0..n);
    for r in m.iter_mut() {
        r.swap(i, j);
    }
    m
}
