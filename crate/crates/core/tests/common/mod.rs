#![allow(dead_code)]

use bolalg::catalog;
use bolalg::lie::from_lie_algebra;
use bolalg::linalg::scalar::{frac, int};
use bolalg::tensor::{Tensor3, Tensor4};
use bolalg::{check_axioms, AlgebraBuilder, BolAlgebra, Matrix, Scalar, Subspace, Vector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar(rng: &mut impl Rng) -> Scalar {
    frac(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn vector(rng: &mut impl Rng, n: usize) -> Vector {
    (0..n).map(|_| scalar(rng)).collect()
}

pub fn invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| int(rng.gen_range(-2..=2)));
        if m.inverse().is_some() {
            return m;
        }
    }
}

pub fn random_subspace(rng: &mut impl Rng, n: usize) -> Subspace {
    let k = rng.gen_range(0..=n);
    let vs: Vec<Vector> = (0..k).map(|_| vector(rng, n)).collect();
    Subspace::canonicalize(&vs, n).unwrap()
}

/// `x·y = λ[x,y]`, `(x,y,z) = μ[[x,y],z]`.
pub fn scaled_lie(brackets: &Tensor3, lambda: &Scalar, mu: &Scalar) -> BolAlgebra {
    let base = from_lie_algebra(brackets).unwrap();
    let n = base.dim();
    let mut b = Tensor3::zeros(n);
    let mut t = Tensor4::zeros(n);
    for j in 0..n {
        for k in 0..n {
            for i in 0..n {
                b.set(i, j, k, lambda * base.binary().get(i, j, k));
                for l in 0..n {
                    t.set(i, j, k, l, mu * base.ternary().get(i, j, k, l));
                }
            }
        }
    }
    BolAlgebra::from_tensors(b, t).unwrap()
}

fn semidirect(rng: &mut impl Rng) -> Tensor3 {
    // R ⋉ R²: [e3, e1] = M e1, [e3, e2] = M e2, [e1, e2] = 0.
    let mut c = Tensor3::zeros(3);
    for col in 0..2 {
        for row in 0..2 {
            let q = int(rng.gen_range(-2..=2));
            c.set(row, 2, col, q.clone());
            c.set(row, col, 2, -q);
        }
    }
    c
}

/// A dimension-3 algebra satisfying B1-B4, in a random basis.
pub fn random_bol3(rng: &mut impl Rng) -> BolAlgebra {
    let base = match rng.gen_range(0..6) {
        0 => {
            let mut b = AlgebraBuilder::new(3);
            b.product(0, 2, &[(0, scalar(rng)), (1, scalar(rng))]).unwrap();
            b.product(1, 2, &[(0, scalar(rng)), (1, scalar(rng))]).unwrap();
            b.build().unwrap()
        }
        1 => scaled_lie(&semidirect(rng), &scalar(rng), &scalar(rng)),
        2 => {
            // B3 leaves λ(λ² - μ)[[x,y],[z,w]] on sl2.
            let s = scalar(rng);
            if rng.gen_bool(0.5) {
                scaled_lie(&catalog::sl2_brackets(), &s, &(&s * &s))
            } else {
                scaled_lie(&catalog::sl2_brackets(), &int(0), &s)
            }
        }
        3 => scaled_lie(&catalog::heisenberg_brackets(), &scalar(rng), &scalar(rng)),
        4 => catalog::type_i(),
        _ => BolAlgebra::zero(3),
    };
    let v = base.change_basis(&invertible(rng, 3)).unwrap();
    assert!(check_axioms(&v).all_pass(), "generator produced a non-Bol algebra");
    v
}

/// Catalog entries that satisfy the identities, families at small parameters.
pub fn passing_fixtures() -> Vec<(String, BolAlgebra)> {
    let mut out = Vec::new();
    for id in catalog::ids() {
        let mut param_sets = vec![catalog::sample_params(id).unwrap()];
        if id == "zero-n" {
            param_sets = (1..=3).map(|n| catalog::parse_params(&[format!("n={n}")]).unwrap()).collect();
        }
        for params in param_sets {
            let e = catalog::get(id, &params).unwrap();
            if check_axioms(&e.algebra).all_pass() {
                out.push((format!("{id} {params:?}"), e.algebra));
            }
        }
    }
    out
}

// Evaluation of the operations and identities straight from the structure
// constants, independent of the library's own evaluator.

pub fn mul(v: &BolAlgebra, x: &[Scalar], y: &[Scalar]) -> Vector {
    let n = v.dim();
    (0..n)
        .map(|i| {
            let mut acc = int(0);
            for j in 0..n {
                for k in 0..n {
                    acc += v.binary().get(i, j, k) * &x[j] * &y[k];
                }
            }
            acc
        })
        .collect()
}

pub fn tri(v: &BolAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let n = v.dim();
    (0..n)
        .map(|i| {
            let mut acc = int(0);
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        acc += v.ternary().get(i, j, k, l) * &x[j] * &y[k] * &z[l];
                    }
                }
            }
            acc
        })
        .collect()
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn b1(v: &BolAlgebra, x: &[Scalar]) -> Vector {
    mul(v, x, x)
}

pub fn b2(v: &BolAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    add(&add(&tri(v, x, y, z), &tri(v, y, z, x)), &tri(v, z, x, y))
}

pub fn b3(v: &BolAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar], w: &[Scalar]) -> Vector {
    let t1 = mul(v, &tri(v, x, y, z), w);
    let t2 = mul(v, &tri(v, x, y, w), z);
    let t3 = tri(v, z, w, &mul(v, x, y));
    let t4 = tri(v, x, y, &mul(v, z, w));
    let t5 = mul(v, &mul(v, x, y), &mul(v, z, w));
    add(&sub(&add(&sub(&t1, &t2), &t3), &t4), &t5)
}

pub fn b4(v: &BolAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar], w: &[Scalar], u: &[Scalar]) -> Vector {
    let lhs = tri(v, x, y, &tri(v, z, w, u));
    let r1 = tri(v, &tri(v, x, y, z), w, u);
    let r2 = tri(v, z, &tri(v, x, y, w), u);
    let r3 = tri(v, z, w, &tri(v, x, y, u));
    sub(&lhs, &add(&add(&r1, &r2), &r3))
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| *x == int(0))
}

/// Every subspace spanned by at most `dim` vectors with entries in {-1,0,1}.
pub fn sign_subspaces(n: usize) -> Vec<Subspace> {
    let mut vectors = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 1..total {
        let mut c = code;
        let v: Vector = (0..n)
            .map(|_| {
                let d = (c % 3) as i64 - 1;
                c /= 3;
                int(d)
            })
            .collect();
        vectors.push(v);
    }
    let mut out: Vec<Subspace> = Vec::new();
    let mut push = |s: Subspace| {
        if !out.contains(&s) {
            out.push(s);
        }
    };
    for a in &vectors {
        push(Subspace::canonicalize(std::slice::from_ref(a), n).unwrap());
        for b in &vectors {
            push(Subspace::canonicalize(&[a.clone(), b.clone()], n).unwrap());
        }
    }
    push(Subspace::full(n));
    out
}
