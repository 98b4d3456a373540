use crate::Real;

/// Nodes and weights of a one-dimensional quadrature rule on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> GaussRule<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: Fn(T) -> T>(&self, f: F) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `n`-point Gauss–Legendre rule, exact for polynomials of degree `2n - 1`.
/// Nodes ascending.
pub fn gauss_legendre<T: Real>(n: usize) -> GaussRule<T> {
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = T::from_usize_exact(n);
    // P_n(x) and P_n'(x) by recurrence.
    let eval = |x: T| {
        let (mut p0, mut p1) = (T::one(), x);
        for k in 1..n {
            let kf = T::from_usize_exact(k);
            let p2 = ((kf + kf + T::one()) * x * p1 - kf * p0) / (kf + T::one());
            p0 = p1;
            p1 = p2;
        }
        (p1, nf * (x * p1 - p0) / (x * x - T::one()))
    };
    for i in 0..n.div_ceil(2) {
        let mut x = (T::PI() * (T::from_usize_exact(i) + T::lit(0.75)) / (nf + T::lit(0.5))).cos();
        for _ in 0..100 {
            let (p, dp) = eval(x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= T::epsilon() * T::lit(2.0) {
                break;
            }
        }
        let (_, dp) = eval(x);
        let w = T::lit(2.0) / ((T::one() - x * x) * dp * dp);
        nodes[i] = -x;
        weights[i] = w;
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    GaussRule { nodes, weights }
}

/// Clenshaw–Curtis rule on the `n + 1` Chebyshev–Lobatto points
/// `cos(k pi / n)`, returned ascending. Exact for polynomials of degree `n`.
pub fn clenshaw_curtis<T: Real>(n: usize) -> GaussRule<T> {
    assert!(n >= 1, "need at least two points");
    let nf = T::from_usize_exact(n);
    let mut nodes = Vec::with_capacity(n + 1);
    let mut weights = Vec::with_capacity(n + 1);
    for k in (0..=n).rev() {
        let theta = T::PI() * T::from_usize_exact(k) / nf;
        let x = if k == 0 {
            T::one()
        } else if k == n {
            -T::one()
        } else {
            theta.cos()
        };
        let mut s = T::zero();
        for j in 1..=n / 2 {
            let jf = T::from_usize_exact(j);
            let b = if 2 * j == n { T::one() } else { T::lit(2.0) };
            s += b / (T::lit(4.0) * jf * jf - T::one()) * (T::lit(2.0) * jf * theta).cos();
        }
        let c = if k == 0 || k == n {
            T::one()
        } else {
            T::lit(2.0)
        };
        nodes.push(x);
        weights.push(c / nf * (T::one() - s));
    }
    GaussRule { nodes, weights }
}
