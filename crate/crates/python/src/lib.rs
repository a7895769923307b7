//! Python bindings. Integers cross as Python `int`, rationals as
//! `fractions.Fraction`.

use apollon::enumeration as en;
use apollon::frames as fr;
use apollon::numerics::{Int, Rat};
use apollon::render::{LabelMode, RenderOptions};
use apollon::symbols as sy;
use apollon::Error;
use pyo3::exceptions::{PyNotImplementedError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::StripUnsupported => PyNotImplementedError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Root parameters `(B, mu, k, n)` of a gasket.
#[pyclass(
    name = "GasketKey",
    module = "apollon_py",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGasketKey(en::GasketKey);

#[pymethods]
impl PyGasketKey {
    #[new]
    fn new(b: Int, mu: Int, k: Int, n: Int) -> PyResult<Self> {
        en::GasketKey::new(b, mu, k, n).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn strip() -> Self {
        Self(en::GasketKey::strip())
    }

    #[getter]
    fn b(&self) -> Int {
        self.0.b().clone()
    }

    #[getter]
    fn mu(&self) -> Int {
        self.0.mu().clone()
    }

    #[getter]
    fn k(&self) -> Int {
        self.0.k().clone()
    }

    #[getter]
    fn n(&self) -> Int {
        self.0.n().clone()
    }

    fn is_strip(&self) -> bool {
        self.0.is_strip()
    }

    fn is_irreducible(&self) -> bool {
        self.0.is_irreducible()
    }

    fn quintet(&self) -> Vec<Int> {
        self.0.quintet().0.to_vec()
    }

    fn __repr__(&self) -> String {
        format!("GasketKey({})", self.0)
    }
}

/// A circle as its reduced coordinates `(x_dot, y_dot)` and bend.
#[pyclass(
    name = "Circle",
    module = "apollon_py",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq)]
struct PyCircle(sy::CircleSymbol);

#[pymethods]
impl PyCircle {
    #[getter]
    fn bend(&self) -> Int {
        self.0.bend().clone()
    }

    #[getter]
    fn x_dot(&self) -> Rat {
        self.0.x_dot().clone()
    }

    #[getter]
    fn y_dot(&self) -> Rat {
        self.0.y_dot().clone()
    }

    fn center(&self) -> (Rat, Rat) {
        self.0.center()
    }

    fn radius(&self) -> Rat {
        self.0.radius()
    }

    fn __repr__(&self) -> String {
        format!("Circle({})", self.0)
    }
}

/// One row of the gasket table.
#[pyclass(name = "GasketRecord", module = "apollon_py", frozen, get_all)]
struct PyGasketRecord {
    key: PyGasketKey,
    quintet: Vec<Int>,
    shift: Rat,
    symmetry: String,
    scale: u64,
}

#[pymethods]
impl PyGasketRecord {
    fn __repr__(&self) -> String {
        format!(
            "GasketRecord(key={}, symmetry={}, scale={})",
            self.key.0, self.symmetry, self.scale
        )
    }
}

#[pyfunction]
fn solve_master(b: Int) -> Vec<PyGasketKey> {
    en::solve_master(&b).into_iter().map(PyGasketKey).collect()
}

#[pyfunction]
fn quintet(key: &PyGasketKey) -> Vec<Int> {
    key.quintet()
}

#[pyfunction]
fn key_from_quintet(bends: [Int; 5]) -> PyResult<PyGasketKey> {
    en::key_from_quintet(&en::BendQuintet(bends))
        .map(PyGasketKey)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (max_bend, irreducible_only = true))]
fn enumerate(py: Python<'_>, max_bend: u64, irreducible_only: bool) -> Vec<PyGasketRecord> {
    py.detach(|| en::enumerate(max_bend, irreducible_only))
        .into_iter()
        .map(|r| PyGasketRecord {
            quintet: r.quintet.0.to_vec(),
            shift: r.shift,
            symmetry: r.symmetry.as_str().to_string(),
            scale: r.scale,
            key: PyGasketKey(r.key),
        })
        .collect()
}

#[pyfunction]
fn classify(key: &PyGasketKey) -> &'static str {
    en::classify(&key.0).as_str()
}

#[pyfunction]
fn shift(key: &PyGasketKey) -> Rat {
    en::shift(&key.0)
}

#[pyfunction]
fn descartes_holds(a: Int, b: Int, c: Int, d: Int) -> bool {
    apollon::descartes::descartes_holds(&a, &b, &c, &d)
}

#[pyfunction]
fn boyd_dual(a: Int, b: Int, c: Int, d: Int) -> PyResult<Int> {
    apollon::descartes::boyd_dual(&a, &b, &c, &d).map_err(to_py)
}

#[pyfunction]
fn fourth_bends(a: Int, b: Int, c: Int) -> PyResult<(Int, Int)> {
    apollon::descartes::fourth_bends(&a, &b, &c).map_err(to_py)
}

#[pyfunction]
fn principal_symbols(key: &PyGasketKey) -> PyResult<Vec<PyCircle>> {
    Ok(sy::principal_symbols(&key.0)
        .map_err(to_py)?
        .into_iter()
        .map(PyCircle)
        .collect())
}

/// Every circle with bend at most `max_bend`, sorted by bend then coordinates.
#[pyfunction]
fn generate(py: Python<'_>, key: &PyGasketKey, max_bend: Int) -> PyResult<Vec<PyCircle>> {
    let packing = py
        .detach(|| sy::generate(&key.0, &max_bend))
        .map_err(to_py)?;
    Ok(packing.circles().iter().cloned().map(PyCircle).collect())
}

#[pyfunction]
fn integral_frames_predicate(key: &PyGasketKey) -> bool {
    fr::integral_frames_predicate(&key.0)
}

/// The six `(pair, delta, gamma, h)` entries of the principal frame.
#[pyfunction]
fn principal_frame(key: &PyGasketKey) -> PyResult<Vec<(&'static str, Rat, Rat, Int)>> {
    let frame = fr::principal_frame(&key.0).map_err(to_py)?;
    Ok(fr::PAIR_LABELS
        .iter()
        .zip(frame.entries())
        .map(|(label, t)| (*label, t.delta.clone(), t.gamma.clone(), t.h.clone()))
        .collect())
}

/// `(delta_matrix, h_matrix)` for replacing slot `replaced` (0-based).
#[pyfunction]
fn transition_matrix(replaced: usize) -> PyResult<(fr::Matrix6, fr::Matrix6)> {
    if replaced >= 4 {
        return Err(PyValueError::new_err(format!(
            "slot {replaced} out of range 0..4"
        )));
    }
    let m = fr::transition_matrix(replaced);
    Ok((m.delta, m.h))
}

#[pyfunction]
#[pyo3(signature = (key, max_bend, width = 800, labels = "none", draw_frame = false))]
fn render_svg(
    py: Python<'_>,
    key: &PyGasketKey,
    max_bend: Int,
    width: u32,
    labels: &str,
    draw_frame: bool,
) -> PyResult<String> {
    let label_mode: LabelMode = labels.parse().map_err(PyValueError::new_err)?;
    let opts = RenderOptions {
        width_px: width,
        label_mode,
        draw_frame,
        ..Default::default()
    };
    py.detach(|| {
        let packing = sy::generate(&key.0, &max_bend)?;
        apollon::render::render_svg(&packing, &opts)
    })
    .map_err(to_py)
}

#[pymodule]
pub fn apollon_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGasketKey>()?;
    m.add_class::<PyCircle>()?;
    m.add_class::<PyGasketRecord>()?;
    m.add_function(wrap_pyfunction!(solve_master, m)?)?;
    m.add_function(wrap_pyfunction!(quintet, m)?)?;
    m.add_function(wrap_pyfunction!(key_from_quintet, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(shift, m)?)?;
    m.add_function(wrap_pyfunction!(descartes_holds, m)?)?;
    m.add_function(wrap_pyfunction!(boyd_dual, m)?)?;
    m.add_function(wrap_pyfunction!(fourth_bends, m)?)?;
    m.add_function(wrap_pyfunction!(principal_symbols, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(integral_frames_predicate, m)?)?;
    m.add_function(wrap_pyfunction!(principal_frame, m)?)?;
    m.add_function(wrap_pyfunction!(transition_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(render_svg, m)?)?;
    Ok(())
}
