use std::sync::OnceLock;

use crate::arith::cyclo::lcm;
use crate::arith::roots::find_roots;
use crate::arith::{Cyclo, RationalSeries};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poisson::PoissonAlgebra;
use crate::poly::{LinearForm, Poly};

/// A graded algebra map given by its action on generators: column i holds
/// the coordinates of g(x_i).
#[derive(Clone, Debug)]
pub struct GradedMap {
    matrix: Matrix,
    order: OnceLock<Option<u32>>,
}

impl PartialEq for GradedMap {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl GradedMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension(
                "a graded map needs a square matrix".into(),
            ));
        }
        if matrix.det()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(GradedMap {
            matrix,
            order: OnceLock::new(),
        })
    }

    pub fn identity(n: usize) -> Self {
        GradedMap {
            matrix: Matrix::identity(n),
            order: OnceLock::new(),
        }
    }

    pub fn diagonal(d: &[Cyclo]) -> Result<Self> {
        Self::new(Matrix::diagonal(d))
    }

    /// Map sending x_i to x_{perm[i]}.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            if p >= n {
                return Err(Error::Dimension("permutation index out of range".into()));
            }
            m.set(p, i, Cyclo::one());
        }
        Self::new(m)
    }

    /// From images of the generators, each a linear form.
    pub fn from_images(images: &[LinearForm]) -> Result<Self> {
        Self::new(Matrix::from_columns(images)?)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn nvars(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        f.apply_linear_unchecked(&self.matrix)
    }

    pub fn image(&self, i: usize) -> Poly {
        Poly::from_linear_form(&self.matrix.column(i))
    }

    /// g then h applied to generators: (self . other)(x) = self(other(x)).
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        let m = self.matrix.mul(&other.matrix).expect("same size");
        GradedMap {
            matrix: m,
            order: OnceLock::new(),
        }
    }

    pub fn inverse(&self) -> GradedMap {
        GradedMap {
            matrix: self.matrix.inverse().expect("invertible"),
            order: OnceLock::new(),
        }
    }

    /// Order of the map, `None` for infinite order. Decided from the
    /// minimal polynomial: squarefree with every root a root of unity.
    pub fn order(&self) -> Option<u32> {
        *self.order.get_or_init(|| finite_order(&self.matrix))
    }
}

fn finite_order(m: &Matrix) -> Option<u32> {
    let mp = m.minimal_polynomial().ok()?;
    if !mp.is_squarefree() {
        return None;
    }
    let roots = find_roots(&mp);
    if !roots.complete {
        // every root of unity of bounded degree is found, so a missing
        // root cannot be one
        return None;
    }
    let mut ord = 1;
    for r in &roots.roots {
        ord = lcm(ord, r.root_of_unity_order().ok()??);
    }
    Some(ord)
}

/// The first generator pair (i, j) with g({x_i, x_j}) != {g x_i, g x_j}.
pub fn automorphism_failure(a: &PoissonAlgebra, g: &GradedMap) -> Result<Option<(usize, usize)>> {
    let n = a.nvars();
    if g.nvars() != n {
        return Err(Error::Dimension(format!(
            "map on {} variables, algebra on {n}",
            g.nvars()
        )));
    }
    let images: Vec<Poly> = (0..n).map(|i| g.image(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if g.apply(a.entry(i, j)) != a.bracket(&images[i], &images[j]) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_poisson_automorphism(a: &PoissonAlgebra, g: &GradedMap) -> Result<bool> {
    Ok(automorphism_failure(a, g)?.is_none())
}

#[derive(Clone, Debug, PartialEq)]
pub enum Classification {
    NotAutomorphism(String, String),
    InfiniteOrder,
    Identity,
    /// `eigenbasis[0]` is the xi-eigenvector, the rest span the fixed
    /// hyperplane.
    Reflection {
        xi: Cyclo,
        order: u32,
        eigenbasis: Vec<LinearForm>,
    },
    FiniteNonReflection {
        order: u32,
    },
}

impl Classification {
    pub fn kind(&self) -> &'static str {
        match self {
            Classification::NotAutomorphism(..) => "not-automorphism",
            Classification::InfiniteOrder => "infinite-order",
            Classification::Identity => "identity",
            Classification::Reflection { .. } => "reflection",
            Classification::FiniteNonReflection { .. } => "finite-non-reflection",
        }
    }
}

pub fn classify(a: &PoissonAlgebra, g: &GradedMap) -> Result<Classification> {
    if let Some((i, j)) = automorphism_failure(a, g)? {
        return Ok(Classification::NotAutomorphism(
            a.ring().name(i).into(),
            a.ring().name(j).into(),
        ));
    }
    classify_linear(g)
}

/// Classification of the linear map alone, assuming it is an automorphism.
pub fn classify_linear(g: &GradedMap) -> Result<Classification> {
    let n = g.nvars();
    let m = g.matrix();
    if m.is_identity() {
        return Ok(Classification::Identity);
    }
    let Some(order) = g.order() else {
        return Ok(Classification::InfiniteOrder);
    };
    let id = Matrix::identity(n);
    let shifted = m.sub(&id);
    if shifted.rank() != 1 {
        return Ok(Classification::FiniteNonReflection { order });
    }
    let xi = (&m.trace() - &Cyclo::from_int(n as i64 - 1)).descend();
    if xi.is_one() || xi.root_of_unity_order()?.is_none() {
        return Ok(Classification::FiniteNonReflection { order });
    }
    let mut eigenbasis = m.sub(&id.scale(&xi)).kernel();
    eigenbasis.extend(shifted.kernel());
    Ok(Classification::Reflection {
        xi,
        order,
        eigenbasis,
    })
}

/// Graded trace sum_k tr(g | A_k) t^k = 1 / det(1 - M t).
pub fn trace_series(g: &GradedMap) -> Result<RationalSeries> {
    RationalSeries::new(crate::arith::UniPoly::one(), g.matrix().det_one_minus_t()?)
}
