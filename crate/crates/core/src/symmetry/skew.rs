use crate::arith::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poisson::PoissonAlgebra;

/// The derivation x_j -> a_j x_j recorded as the vector (a_j).
#[derive(Clone, Debug, PartialEq)]
pub struct LDegree(pub Vec<Cyclo>);

/// The matrix q with {x_i, x_j} = q_ij x_i x_j, if the bracket has that form.
pub fn skew_matrix(a: &PoissonAlgebra) -> Result<Matrix> {
    let n = a.nvars();
    let mut q = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let p = a.entry(i, j);
            if p.is_zero() {
                continue;
            }
            let mut m = vec![0u32; n];
            m[i] = 1;
            m[j] = 1;
            let c = p.coeff(&crate::poly::Mono(m));
            if p.len() != 1 || c.is_zero() {
                return Err(Error::NotSkew);
            }
            q.set(i, j, c.clone());
            q.set(j, i, -&c);
        }
    }
    Ok(q)
}

/// Degree of x^I: the vector q^T I.
pub fn l_degree(a: &PoissonAlgebra, exps: &[u32]) -> Result<LDegree> {
    let q = skew_matrix(a)?;
    Ok(l_degree_of(&q, exps))
}

pub fn l_degree_of(q: &Matrix, exps: &[u32]) -> LDegree {
    let n = q.rows();
    LDegree(
        (0..n)
            .map(|j| {
                let mut acc = Cyclo::zero();
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        acc += &(q.get(i, j) * &Cyclo::from_int(e as i64));
                    }
                }
                acc
            })
            .collect(),
    )
}

/// chi(alpha_I, alpha_J) = I^T q J, so that {x^I, x^J} = chi x^{I+J}.
pub fn bicharacter(a: &PoissonAlgebra, i: &[u32], j: &[u32]) -> Result<Cyclo> {
    let q = skew_matrix(a)?;
    let d = l_degree_of(&q, i);
    let mut acc = Cyclo::zero();
    for (k, &e) in j.iter().enumerate() {
        if e > 0 {
            acc += &(&d.0[k] * &Cyclo::from_int(e as i64));
        }
    }
    Ok(acc)
}

/// Classes of indices with identical rows of q, in order of first index.
pub fn block_decomposition(q: &Matrix) -> Result<Vec<Vec<usize>>> {
    let n = q.rows();
    if !q.is_square() || (0..n).any(|i| (0..n).any(|j| *q.get(i, j) != -q.get(j, i))) {
        return Err(Error::NotSkew);
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        match blocks.iter_mut().find(|b| q.row(b[0]) == q.row(i)) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    debug_assert!(blocks
        .iter()
        .all(|b| b.iter().all(|&i| b.iter().all(|&k| q.get(i, k).is_zero()))));
    Ok(blocks)
}
