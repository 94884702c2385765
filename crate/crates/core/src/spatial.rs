//! Grids, fields with ghost layers, boundary conditions and the
//! semi-discrete right-hand side `dU/dt = L(U)`.

use crate::alt_flux::{cu_flux_from_parts, hllc_flux_from_parts};
use crate::correction::correction_from_points;
use crate::eos::{
    cons_to_prim, flux_from_parts, prim_to_cons, Axis, ConservedState, FluxVector, GasParams,
    PrimitiveState, StateVector,
};
use crate::error::{Result, SolverError};
use crate::par::{for_each_chunk, Execution};
use crate::reconstruction::{reconstruct_line, FacePair, LineScratch, GHOST};
use crate::tv_flux::tv_flux_from_parts;
use crate::{FluxFamily, SchemeConfig};

/// Uniform Cartesian grid. In 1-D `ny == 1` and the y-extent is unused.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub dim: usize,
    pub nx: usize,
    pub ny: usize,
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub dx: f64,
    pub dy: f64,
    pub ghost_width: usize,
}

impl Grid {
    pub fn new_1d(nx: usize, xmin: f64, xmax: f64) -> Result<Self> {
        check_axis(nx, xmin, xmax)?;
        Ok(Self {
            dim: 1,
            nx,
            ny: 1,
            xmin,
            xmax,
            ymin: 0.0,
            ymax: 1.0,
            dx: (xmax - xmin) / nx as f64,
            dy: 1.0,
            ghost_width: GHOST,
        })
    }

    pub fn new_2d(nx: usize, ny: usize, x: (f64, f64), y: (f64, f64)) -> Result<Self> {
        check_axis(nx, x.0, x.1)?;
        check_axis(ny, y.0, y.1)?;
        Ok(Self {
            dim: 2,
            nx,
            ny,
            xmin: x.0,
            xmax: x.1,
            ymin: y.0,
            ymax: y.1,
            dx: (x.1 - x.0) / nx as f64,
            dy: (y.1 - y.0) / ny as f64,
            ghost_width: GHOST,
        })
    }

    pub fn x_center(&self, i: usize) -> f64 {
        self.xmin + (i as f64 + 0.5) * self.dx
    }

    pub fn y_center(&self, j: usize) -> f64 {
        if self.dim == 1 {
            0.0
        } else {
            self.ymin + (j as f64 + 0.5) * self.dy
        }
    }

    pub fn cells(&self) -> usize {
        self.nx * self.ny
    }

    /// Padded row length.
    pub fn width(&self) -> usize {
        self.nx + 2 * self.ghost_width
    }

    /// Number of padded rows (1 in 1-D).
    pub fn height(&self) -> usize {
        if self.dim == 1 {
            1
        } else {
            self.ny + 2 * self.ghost_width
        }
    }

    /// Cell volume used by the error norms.
    pub fn cell_volume(&self) -> f64 {
        if self.dim == 1 {
            self.dx
        } else {
            self.dx * self.dy
        }
    }
}

fn check_axis(n: usize, lo: f64, hi: f64) -> Result<()> {
    if n == 0 {
        return Err(SolverError::InvalidConfig("mesh must have at least one cell".into()));
    }
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(SolverError::InvalidConfig(format!("bad interval [{lo}, {hi}]")));
    }
    Ok(())
}

/// Conserved states on a padded row-major array, plus the current time.
#[derive(Clone, Debug, PartialEq)]
pub struct Field<const N: usize> {
    pub grid: Grid,
    pub data: Vec<ConservedState<N>>,
    pub time: f64,
}

impl<const N: usize> Field<N> {
    pub fn new(grid: Grid, fill: ConservedState<N>) -> Result<Self> {
        if grid.dim + 2 != N {
            return Err(SolverError::GridMismatch(format!(
                "{}-D grid holding {N}-component states",
                grid.dim
            )));
        }
        Ok(Self {
            data: vec![fill; grid.width() * grid.height()],
            grid,
            time: 0.0,
        })
    }

    /// Sample `init(x, y)` at every interior cell center.
    pub fn from_fn<F>(grid: Grid, mut init: F) -> Result<Self>
    where
        F: FnMut(f64, f64) -> Result<ConservedState<N>>,
    {
        let mut field = Self::new(grid, StateVector::ZERO)?;
        for j in 0..grid.ny {
            for i in 0..grid.nx {
                *field.cell_mut(i, j) = init(grid.x_center(i), grid.y_center(j))?;
            }
        }
        Ok(field)
    }

    #[inline]
    fn padded_index(&self, i: usize, j: usize) -> usize {
        let g = self.grid.ghost_width;
        let row = if self.grid.dim == 1 { 0 } else { j + g };
        row * self.grid.width() + i + g
    }

    /// Interior cell `(i, j)`; `j` is ignored in 1-D.
    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> ConservedState<N> {
        self.data[self.padded_index(i, j)]
    }

    #[inline]
    pub fn cell_mut(&mut self, i: usize, j: usize) -> &mut ConservedState<N> {
        let k = self.padded_index(i, j);
        &mut self.data[k]
    }

    /// Interior cells in row-major order.
    pub fn interior(&self) -> Vec<ConservedState<N>> {
        let mut out = Vec::with_capacity(self.grid.cells());
        for j in 0..self.grid.ny {
            for i in 0..self.grid.nx {
                out.push(self.cell(i, j));
            }
        }
        out
    }

    /// Sum of each conserved component over the interior, times the cell volume.
    pub fn totals(&self) -> StateVector<N> {
        let mut sum = StateVector::ZERO;
        for j in 0..self.grid.ny {
            let start = self.padded_index(0, j);
            for c in &self.data[start..start + self.grid.nx] {
                sum += *c;
            }
        }
        sum * self.grid.cell_volume()
    }

    /// Primitive state of every interior cell; fails on the first cell with
    /// non-positive density or pressure.
    pub fn primitives(&self, gas: GasParams) -> Result<Vec<PrimitiveState>> {
        self.interior().iter().map(|u| cons_to_prim(u, gas)).collect()
    }
}

/// Boundary condition on one side of the domain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryKind {
    Periodic,
    /// Zero-order extrapolation.
    Free,
    /// Reflection with the wall-normal momentum negated.
    SolidWall,
    /// Fixed primitive state in every ghost layer.
    Dirichlet(PrimitiveState),
}

/// Boundary conditions per side. The y sides are ignored in 1-D.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Boundaries {
    pub left: BoundaryKind,
    pub right: BoundaryKind,
    pub bottom: BoundaryKind,
    pub top: BoundaryKind,
}

impl Boundaries {
    pub fn uniform(kind: BoundaryKind) -> Self {
        Self {
            left: kind,
            right: kind,
            bottom: kind,
            top: kind,
        }
    }

    pub fn validate(&self, dim: usize) -> Result<()> {
        let periodic = |k: BoundaryKind| k == BoundaryKind::Periodic;
        if periodic(self.left) != periodic(self.right) {
            return Err(SolverError::InconsistentPeriodicPair);
        }
        if dim == 2 && periodic(self.bottom) != periodic(self.top) {
            return Err(SolverError::InconsistentPeriodicPair);
        }
        Ok(())
    }
}

/// Populate all ghost layers. x-sides are filled on interior rows first, then
/// the y-sides over full padded rows, which also fills the corners.
pub fn fill_ghosts<const N: usize>(
    field: &mut Field<N>,
    bcs: &Boundaries,
    gas: GasParams,
) -> Result<()> {
    let grid = field.grid;
    bcs.validate(grid.dim)?;
    let g = grid.ghost_width;
    let w = grid.width();
    let (row_lo, row_hi) = if grid.dim == 1 { (0, 1) } else { (g, g + grid.ny) };
    let lo = side_action::<N>(bcs.left, gas);
    let hi = side_action::<N>(bcs.right, gas);
    for row in row_lo..row_hi {
        let line = &mut field.data[row * w..(row + 1) * w];
        fill_line(line, 1, grid.nx, g, lo, hi, 1);
    }
    if grid.dim == 2 {
        let lo = side_action::<N>(bcs.bottom, gas);
        let hi = side_action::<N>(bcs.top, gas);
        for col in 0..w {
            fill_line(&mut field.data[col..], w, grid.ny, g, lo, hi, 2);
        }
    }
    Ok(())
}

#[derive(Clone, Copy)]
enum SideAction<const N: usize> {
    Periodic,
    Free,
    Wall,
    Fixed(ConservedState<N>),
}

fn side_action<const N: usize>(kind: BoundaryKind, gas: GasParams) -> SideAction<N> {
    match kind {
        BoundaryKind::Periodic => SideAction::Periodic,
        BoundaryKind::Free => SideAction::Free,
        BoundaryKind::SolidWall => SideAction::Wall,
        BoundaryKind::Dirichlet(w) => SideAction::Fixed(prim_to_cons(&w, gas)),
    }
}

/// Fill the ghosts of one strided line of `n` interior values starting at
/// logical index `g`. `normal` is the momentum slot flipped by walls.
fn fill_line<const N: usize>(
    data: &mut [ConservedState<N>],
    stride: usize,
    n: usize,
    g: usize,
    lo: SideAction<N>,
    hi: SideAction<N>,
    normal: usize,
) {
    let at = |k: usize| k * stride;
    let reflect = |mut u: ConservedState<N>| {
        u[normal] = -u[normal];
        u
    };
    for k in 0..g {
        let ghost = g - 1 - k;
        data[at(ghost)] = match lo {
            SideAction::Periodic => data[at(g + n - 1 - k % n)],
            SideAction::Free => data[at(g)],
            SideAction::Wall => reflect(data[at(g + k.min(n - 1))]),
            SideAction::Fixed(u) => u,
        };
        let ghost = g + n + k;
        data[at(ghost)] = match hi {
            SideAction::Periodic => data[at(g + k % n)],
            SideAction::Free => data[at(g + n - 1)],
            SideAction::Wall => reflect(data[at(g + n - 1 - k.min(n - 1))]),
            SideAction::Fixed(u) => u,
        };
    }
}

/// Source terms added to the right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// `(0, 0, rho, rho v)` in 2-D.
    Gravity,
}

/// Gravity source `(0, 0, rho, rho v)` of every interior cell, row-major.
pub fn gravity_source(field: &Field<4>) -> Vec<StateVector<4>> {
    field
        .interior()
        .iter()
        .map(|u| StateVector([0.0, 0.0, u[0], u[2]]))
        .collect()
}

/// Per-thread buffers for one line of interfaces.
#[derive(Debug, Default)]
pub(crate) struct LineWork<const N: usize> {
    line: Vec<ConservedState<N>>,
    prims: Vec<PrimitiveState>,
    point_flux: Vec<FluxVector<N>>,
    faces: Vec<FacePair<N>>,
    h: Vec<FluxVector<N>>,
    recon: LineScratch<N>,
}

/// Interface fluxes `H` of one padded line of `n + 2 GHOST` cells into
/// `work.h` (length `n + 1`).
fn line_fluxes<const N: usize>(
    cells: &[ConservedState<N>],
    axis: Axis,
    cfg: &SchemeConfig,
    gas: GasParams,
    spacing: f64,
    work: &mut LineWork<N>,
) -> Result<()> {
    let n = cells.len() - 2 * GHOST;
    let nfaces = n + 1;
    let base = GHOST - 1;
    let order = cfg.order;
    work.h.resize(nfaces, StateVector::ZERO);

    if order == crate::Order::First || order.is_awe() {
        work.prims.clear();
        for c in cells {
            work.prims.push(cons_to_prim(c, gas)?);
        }
    }
    if order.is_awe() {
        work.point_flux.clear();
        for (c, w) in cells.iter().zip(&work.prims) {
            work.point_flux.push(flux_from_parts(c, w, axis));
        }
    }

    if order == crate::Order::First {
        for f in 0..nfaces {
            let (l, r) = (base + f, base + f + 1);
            work.h[f] = fv_flux(
                cfg.flux,
                &cells[l],
                &work.prims[l],
                &cells[r],
                &work.prims[r],
                axis,
                gas,
            )?;
        }
        return Ok(());
    }

    work.faces.resize(nfaces, FacePair::default());
    reconstruct_line(
        cells,
        order,
        axis,
        &cfg.weno,
        gas,
        spacing,
        &mut work.faces,
        &mut work.recon,
    )?;
    for f in 0..nfaces {
        let face = &work.faces[f];
        let wl = cons_to_prim(&face.minus, gas)?;
        let wr = cons_to_prim(&face.plus, gas)?;
        let mut h = fv_flux(cfg.flux, &face.minus, &wl, &face.plus, &wr, axis, gas)?;
        if order.is_awe() {
            let j = base + f;
            h += correction_from_points(order, &work.point_flux[j - 2..j + 4]);
        }
        work.h[f] = h;
    }
    Ok(())
}

#[inline]
fn fv_flux<const N: usize>(
    family: FluxFamily,
    left: &ConservedState<N>,
    wl: &PrimitiveState,
    right: &ConservedState<N>,
    wr: &PrimitiveState,
    axis: Axis,
    gas: GasParams,
) -> Result<FluxVector<N>> {
    match family {
        FluxFamily::Tv => tv_flux_from_parts(left, wl, right, wr, axis, gas),
        FluxFamily::CuHll => Ok(cu_flux_from_parts(left, wl, right, wr, axis)),
        FluxFamily::Hllc => hllc_flux_from_parts(left, wl, right, wr, axis),
    }
}

/// Interface fluxes `H_{i-1/2}`, `i = 0..=n`, of a single padded line. Exposed
/// for composition tests and diagnostics.
pub fn interface_fluxes<const N: usize>(
    cells: &[ConservedState<N>],
    axis: Axis,
    cfg: &SchemeConfig,
    gas: GasParams,
    spacing: f64,
) -> Result<Vec<FluxVector<N>>> {
    if cells.len() < 2 * GHOST + 1 {
        return Err(SolverError::InsufficientStencil {
            needed: 2 * GHOST + 1,
            got: cells.len(),
        });
    }
    axis.check::<N>()?;
    let mut work = LineWork::default();
    line_fluxes(cells, axis, cfg, gas, spacing, &mut work)?;
    Ok(work.h)
}

/// The semi-discrete operator of one problem: scheme, gas, boundaries and
/// optional source.
#[derive(Clone, Debug)]
pub struct SpatialOperator {
    pub scheme: SchemeConfig,
    pub gas: GasParams,
    pub bcs: Boundaries,
    pub source: Option<Source>,
    pub exec: Execution,
}

impl SpatialOperator {
    pub fn new(scheme: SchemeConfig, gas: GasParams, bcs: Boundaries) -> Self {
        Self {
            scheme,
            gas,
            bcs,
            source: None,
            exec: Execution::default(),
        }
    }

    pub fn with_source(mut self, source: Option<Source>) -> Self {
        self.source = source;
        self
    }

    pub fn with_execution(mut self, exec: Execution) -> Self {
        self.exec = exec;
        self
    }

    /// Refresh ghosts, then write `L(U)` for every interior cell (row-major)
    /// into `out`.
    pub fn evaluate<const N: usize>(
        &self,
        field: &mut Field<N>,
        out: &mut [StateVector<N>],
    ) -> Result<()> {
        let grid = field.grid;
        if out.len() != grid.cells() {
            return Err(SolverError::GridMismatch(format!(
                "rhs buffer of {} cells for a {}-cell grid",
                out.len(),
                grid.cells()
            )));
        }
        fill_ghosts(field, &self.bcs, self.gas)?;
        let field = &*field;
        let (nx, ny, w, g) = (grid.nx, grid.ny, grid.width(), grid.ghost_width);
        let cfg = &self.scheme;
        let gas = self.gas;

        // x-sweep: one padded row per interior row
        let row0 = if grid.dim == 1 { 0 } else { g };
        let inv_dx = 1.0 / grid.dx;
        for_each_chunk(self.exec, out, nx, LineWork::default, |work, k, dst| {
            let start = (row0 + k) * w;
            line_fluxes(&field.data[start..start + w], Axis::X, cfg, gas, grid.dx, work)?;
            for (i, d) in dst.iter_mut().enumerate() {
                *d = (work.h[i + 1] - work.h[i]) * -inv_dx;
            }
            Ok(())
        })?;

        if grid.dim == 2 {
            // y-sweep into a column-major buffer, then add back row-major
            let mut cols = vec![StateVector::ZERO; nx * ny];
            let inv_dy = 1.0 / grid.dy;
            let h = grid.height();
            for_each_chunk(self.exec, &mut cols, ny, LineWork::default, |work, i, dst| {
                let mut line = std::mem::take(&mut work.line);
                line.clear();
                line.extend((0..h).map(|r| field.data[r * w + g + i]));
                let res = line_fluxes(&line, Axis::Y, cfg, gas, grid.dy, work);
                work.line = line;
                res?;
                for (j, d) in dst.iter_mut().enumerate() {
                    *d = (work.h[j + 1] - work.h[j]) * -inv_dy;
                }
                Ok(())
            })?;
            for j in 0..ny {
                for i in 0..nx {
                    out[j * nx + i] += cols[i * ny + j];
                }
            }
        }

        if let Some(Source::Gravity) = self.source {
            if N != 4 {
                return Err(SolverError::InvalidConfig(
                    "gravity source needs a 2-D field".into(),
                ));
            }
            for j in 0..ny {
                for i in 0..nx {
                    let u = field.cell(i, j);
                    let d = &mut out[j * nx + i];
                    d[2] += u[0];
                    d[3] += u[2];
                }
            }
        }
        Ok(())
    }

    /// Convenience wrapper that allocates the output.
    pub fn rhs<const N: usize>(&self, field: &mut Field<N>) -> Result<Vec<StateVector<N>>> {
        let mut out = vec![StateVector::ZERO; field.grid.cells()];
        self.evaluate(field, &mut out)?;
        Ok(out)
    }
}
