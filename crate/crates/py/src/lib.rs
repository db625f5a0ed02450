//! Python bindings: `import tiled_orders`.
//!
//! Matrices cross the boundary as lists of rows, vectors as lists of ints and
//! averages as `fractions.Fraction`. Every library error is raised as
//! `TiledError` carrying `code` and `witness` attributes.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tiled_core as core;
use tiled_core::{IntMatrix, MData, Permutation, Ratio, ShiftVector};

create_exception!(tiled_orders, TiledError, PyValueError);

type Rows = Vec<Vec<i64>>;
type Graph = (Rows, Vec<(usize, usize)>);
type LabelledVector = (Vec<(usize, i64)>, Vec<i64>);

fn raise(py: Python<'_>, e: core::Error) -> PyErr {
    let err = TiledError::new_err(e.to_string());
    let value = err.value(py);
    // Attribute assignment on a fresh exception instance cannot fail.
    let _ = value.setattr("code", e.code());
    let _ = value.setattr("witness", e.witness());
    err
}

trait OrRaise<T> {
    fn or_raise(self, py: Python<'_>) -> PyResult<T>;
}

impl<T> OrRaise<T> for core::Result<T> {
    fn or_raise(self, py: Python<'_>) -> PyResult<T> {
        self.map_err(|e| raise(py, e))
    }
}

fn fraction<'py>(py: Python<'py>, r: Ratio<i64>) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((*r.numer(), *r.denom()))
}

fn vectors(vs: &[core::ExponentVector]) -> Vec<Vec<i64>> {
    vs.iter().map(|v| v.0.clone()).collect()
}

/// Exponent matrix of a tiled order (zero diagonal, 0-based).
#[pyclass(name = "ExponentMatrix", module = "tiled_orders", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyExponentMatrix {
    inner: core::ExponentMatrix,
}

/// Nakayama permutation and Gorenstein parameters.
#[pyclass(name = "GorensteinData", module = "tiled_orders", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGorensteinData {
    inner: core::GorensteinData,
}

#[pymethods]
impl PyExponentMatrix {
    #[new]
    fn new(py: Python<'_>, rows: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(PyExponentMatrix { inner: core::ExponentMatrix::from_rows(&rows).or_raise(py)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.to_rows()
    }

    /// Dict with `triangle_ok`, `basic`, `n_graded`, `first_violation`.
    fn report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.inner.report().or_raise(py)?;
        let d = PyDict::new(py);
        d.set_item("triangle_ok", r.triangle_ok)?;
        d.set_item("basic", r.basic)?;
        d.set_item("n_graded", r.n_graded)?;
        d.set_item("first_violation", r.first_violation.map(|v| (v.i, v.k, v.j)))?;
        Ok(d)
    }

    fn gorenstein(&self, py: Python<'_>) -> PyResult<PyGorensteinData> {
        Ok(PyGorensteinData { inner: core::detect_gorenstein(&self.inner).or_raise(py)? })
    }

    /// `m(i,j) + s(i) - s(j)`.
    fn morita_shift(&self, py: Python<'_>, s: Vec<i64>) -> PyResult<Self> {
        let inner = core::morita_shift(&self.inner, &ShiftVector(s)).or_raise(py)?;
        Ok(PyExponentMatrix { inner })
    }

    /// `(shift, shifted_matrix)`: an N-graded Morita shift with `|p'_i - p_av| < 1`.
    fn normalize(&self, py: Python<'_>) -> PyResult<(Vec<i64>, Self)> {
        let g = core::detect_gorenstein(&self.inner).or_raise(py)?;
        let md = MData::from_order(&self.inner, &g).or_raise(py)?;
        let s = core::normalize_mdata(&md).or_raise(py)?;
        let shifted = core::morita_shift(&self.inner, &s.negated().or_raise(py)?).or_raise(py)?;
        Ok((s.into_inner(), PyExponentMatrix { inner: shifted }))
    }

    /// List of `(labels, vector)` pairs; the zero vector comes first.
    fn tilting_summands(&self, py: Python<'_>) -> PyResult<Vec<LabelledVector>> {
        let g = core::detect_gorenstein(&self.inner).or_raise(py)?;
        let out = core::tilting_summands(&self.inner, &g).or_raise(py)?;
        Ok(out.into_iter().map(|s| (s.labels, s.vector.0)).collect())
    }

    /// Elements of V_A in lexicographic order.
    fn tilting_poset(&self, py: Python<'_>) -> PyResult<Vec<Vec<i64>>> {
        let g = core::detect_gorenstein(&self.inner).or_raise(py)?;
        Ok(vectors(core::build_va(&self.inner, &g).or_raise(py)?.elements()))
    }

    /// `(vertices, arrows)` of the Hasse quiver; arrows point towards 0.
    fn hasse_quiver(&self, py: Python<'_>) -> PyResult<Graph> {
        let g = core::detect_gorenstein(&self.inner).or_raise(py)?;
        let q = core::hasse_quiver(&core::build_va(&self.inner, &g).or_raise(py)?);
        Ok((vectors(&q.vertices), q.arrows))
    }

    fn hom_dim(&self, py: Python<'_>, v: Vec<i64>, w: Vec<i64>, t: i64) -> PyResult<u8> {
        core::hom_dim(&self.inner, &core::ExponentVector(v), &core::ExponentVector(w), t)
            .or_raise(py)
    }

    fn __repr__(&self) -> String {
        format!("ExponentMatrix({:?})", self.inner.to_rows())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pymethods]
impl PyGorensteinData {
    #[getter]
    fn nu(&self) -> Vec<usize> {
        self.inner.nu.images().to_vec()
    }

    #[getter]
    fn ell(&self) -> Vec<i64> {
        self.inner.ell.clone()
    }

    #[getter]
    fn p(&self) -> Vec<i64> {
        self.inner.p.clone()
    }

    #[getter]
    fn p_av<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.p_av)
    }

    /// `p_i - s(i) + s(nu(i))`.
    fn shifted_parameters(&self, py: Python<'_>, s: Vec<i64>) -> PyResult<Vec<i64>> {
        core::shifted_parameters(&self.inner, &ShiftVector(s)).or_raise(py)
    }

    fn grothendieck_rank(&self, py: Python<'_>) -> PyResult<i64> {
        core::grothendieck_rank(&self.inner).or_raise(py)
    }

    fn __repr__(&self) -> String {
        let g = &self.inner;
        format!("GorensteinData(nu={:?}, p={:?}, p_av={})", g.nu.images(), g.p, g.p_av)
    }
}

/// `(matrix, gorenstein_data)` of the cyclic order with the given weights.
#[pyfunction]
fn cyclic_order(py: Python<'_>, weights: Vec<i64>) -> PyResult<(PyExponentMatrix, PyGorensteinData)> {
    let (m, g) = core::cyclic_order(&weights).or_raise(py)?;
    Ok((PyExponentMatrix { inner: m }, PyGorensteinData { inner: g }))
}

fn int_matrix(py: Python<'_>, rows: &[Vec<i64>]) -> PyResult<IntMatrix> {
    IntMatrix::from_rows(rows).or_raise(py)
}

#[pyfunction]
fn is_sigma_nonneg(py: Python<'_>, rows: Vec<Vec<i64>>) -> PyResult<bool> {
    Ok(core::is_sigma_nonneg(&int_matrix(py, &rows)?))
}

/// Shift `s` with `m(i,j) + s(i) - s(j) >= 0`; raises with a negative cycle otherwise.
#[pyfunction]
fn nonneg_conjugate(py: Python<'_>, rows: Vec<Vec<i64>>) -> PyResult<Vec<i64>> {
    Ok(core::nonneg_conjugate(&int_matrix(py, &rows)?).or_raise(py)?.into_inner())
}

/// `(cycle, value)` of a least-sum multiplicity-free cycle (small n only).
#[pyfunction]
fn min_cycle(py: Python<'_>, rows: Vec<Vec<i64>>) -> PyResult<(Vec<usize>, i64)> {
    let (c, v) = core::min_cycle(&int_matrix(py, &rows)?).or_raise(py)?;
    Ok((c.indices().to_vec(), v))
}

#[pyfunction]
fn floor_profile(py: Python<'_>, r: i64, g: i64, n: usize) -> PyResult<Vec<i64>> {
    core::floor_profile(r, g, n).or_raise(py)
}

fn mdata(py: Python<'_>, m: &[Vec<i64>], a: Vec<i64>, nu: Vec<usize>) -> PyResult<MData> {
    let perm = Permutation::new(nu).or_raise(py)?;
    MData::new(int_matrix(py, m)?, a, perm).or_raise(py)
}

/// Total shift taking m-data `(m, a, nu)` to almost constant, non-negative form.
#[pyfunction]
fn normalize_mdata(py: Python<'_>, m: Vec<Vec<i64>>, a: Vec<i64>, nu: Vec<usize>) -> PyResult<Vec<i64>> {
    let md = mdata(py, &m, a, nu)?;
    Ok(core::normalize_mdata(&md).or_raise(py)?.into_inner())
}

/// `(g, m_prime, m_bar)` for floor-type m-data.
#[pyfunction]
fn fold_mdata(
    py: Python<'_>,
    m: Vec<Vec<i64>>,
    a: Vec<i64>,
    nu: Vec<usize>,
) -> PyResult<(i64, Rows, Rows)> {
    let f = core::fold_mdata(&mdata(py, &m, a, nu)?).or_raise(py)?;
    Ok((f.g, f.m_prime.to_rows(), f.m_bar.to_rows()))
}

#[pyfunction]
fn truncate_shift(v: Vec<i64>, j: i64) -> Vec<i64> {
    core::truncate_shift(&core::ExponentVector(v), j).0
}

/// `(vertices, arrows)` of the closed-form Hasse quiver of a cyclic order.
#[pyfunction]
fn cyclic_hasse_oracle(
    py: Python<'_>,
    weights: Vec<i64>,
) -> PyResult<Graph> {
    let o = core::cyclic_hasse_oracle(&weights).or_raise(py)?;
    Ok((vectors(&o.quiver.vertices), o.quiver.arrows))
}

#[pymodule]
fn tiled_orders(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("TiledError", m.py().get_type::<TiledError>())?;
    m.add_class::<PyExponentMatrix>()?;
    m.add_class::<PyGorensteinData>()?;
    m.add_function(wrap_pyfunction!(cyclic_order, m)?)?;
    m.add_function(wrap_pyfunction!(is_sigma_nonneg, m)?)?;
    m.add_function(wrap_pyfunction!(nonneg_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(min_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(floor_profile, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_mdata, m)?)?;
    m.add_function(wrap_pyfunction!(fold_mdata, m)?)?;
    m.add_function(wrap_pyfunction!(truncate_shift, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_hasse_oracle, m)?)?;
    Ok(())
}
