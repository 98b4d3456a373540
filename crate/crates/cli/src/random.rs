use rand::Rng;
use spinwigner::{Complex, DenseOperator, Direction, SpinContent};

/// `(M + M^dagger) / 2` with entries of `M` uniform in the unit square.
pub fn random_hermitian(content: SpinContent, rng: &mut impl Rng) -> DenseOperator<f64> {
    let n = content.dim();
    let raw: Vec<Complex<f64>> = (0..n * n)
        .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    DenseOperator::from_fn(content, |r, c| {
        (raw[r * n + c] + raw[c * n + r].conj()) * 0.5
    })
}

/// Uniform on the sphere.
pub fn random_direction(rng: &mut impl Rng) -> Direction<f64> {
    Direction::from_cos_theta(
        rng.gen_range(-1.0..=1.0),
        rng.gen_range(0.0..std::f64::consts::TAU),
    )
}
