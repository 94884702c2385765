use crate::eos::prim_to_cons;
use crate::error::{Result, SolverError};
use crate::problems::ProblemSpec;
use crate::spatial::{Field, Grid};

/// Density errors over the interior cells.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ErrorNorms {
    pub l1: f64,
    pub l2: f64,
    pub linf: f64,
}

/// `l1 = V sum |d|`, `l2 = sqrt(V sum d^2)`, `linf = max |d|` with `d` the
/// cell-wise density difference and `V` the cell volume.
pub fn error_norms<const N: usize>(computed: &Field<N>, exact: &Field<N>) -> Result<ErrorNorms> {
    let (a, b) = (computed.grid, exact.grid);
    if a.nx != b.nx || a.ny != b.ny || a.dim != b.dim || a.dx != b.dx || a.dy != b.dy {
        return Err(SolverError::GridMismatch(format!(
            "{}x{} vs {}x{}",
            a.nx, a.ny, b.nx, b.ny
        )));
    }
    let (mut s1, mut s2, mut inf) = (0.0_f64, 0.0_f64, 0.0_f64);
    for j in 0..a.ny {
        for i in 0..a.nx {
            let d = (computed.cell(i, j)[0] - exact.cell(i, j)[0]).abs();
            s1 += d;
            s2 += d * d;
            inf = inf.max(d);
        }
    }
    let v = a.cell_volume();
    Ok(ErrorNorms {
        l1: v * s1,
        l2: (v * s2).sqrt(),
        linf: inf,
    })
}

/// Exact solution sampled at the cell centers of `grid` at time `t`.
pub fn exact_field<const N: usize>(spec: &ProblemSpec, grid: Grid, t: f64) -> Result<Field<N>> {
    let mut f = Field::from_fn(grid, |x, y| {
        Ok(prim_to_cons(&spec.exact_solution(x, y, t)?, spec.gas))
    })?;
    f.time = t;
    Ok(f)
}
