//! Python bindings.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use mirrorknot_core::algebra;
use mirrorknot_core::codes::{self, FourCode, StateCode};
use mirrorknot_core::enumerate;
use mirrorknot_core::invariants::{self, KnownFamily};
use mirrorknot_core::mosaic;
use mirrorknot_core::moves::{self, UnlinkStatus};
use mirrorknot_core::render;
use mirrorknot_core::{parse_matrix, serialize_matrix, trace, EdgeLabel, Error};

create_exception!(mirrorknot, MirrorKnotError, PyException);

fn err(e: Error) -> PyErr {
    MirrorKnotError::new_err(format!("{}: {e}", e.name()))
}

#[pyclass(name = "GridCode", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGridCode {
    inner: mirrorknot_core::GridCode,
}

fn wrap(inner: mirrorknot_core::GridCode) -> PyGridCode {
    PyGridCode { inner }
}

#[pymethods]
impl PyGridCode {
    /// Parse `RG[p,q]{{...}}` or a bare nested list.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_matrix(text).map(wrap).map_err(err)
    }

    /// Code of RG[p,q] from its labels, horizontal edges first.
    #[staticmethod]
    fn from_labels(p: usize, q: usize, labels: Vec<i64>) -> PyResult<Self> {
        mirrorknot_core::GridCode::from_values(p, q, &labels).map(wrap).map_err(err)
    }

    #[getter]
    fn p(&self) -> usize {
        self.inner.p()
    }

    #[getter]
    fn q(&self) -> usize {
        self.inner.q()
    }

    #[getter]
    fn labels(&self) -> Vec<i8> {
        self.inner.labels().iter().map(|l| l.value()).collect()
    }

    #[getter]
    fn crossings(&self) -> usize {
        self.inner.crossing_count()
    }

    fn __str__(&self) -> String {
        serialize_matrix(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("GridCode('{}')", serialize_matrix(&self.inner))
    }

    /// Components, crossings and writhe of the traced curve.
    fn trace<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let t = trace(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("components", t.components)?;
        d.set_item("crossings", t.crossings.len())?;
        d.set_item("writhe", t.writhe)?;
        d.set_item("self_writhe", t.self_writhe)?;
        d.set_item("circles", t.circles)?;
        Ok(d)
    }

    #[getter]
    fn components(&self) -> PyResult<usize> {
        Ok(trace(&self.inner).map_err(err)?.components)
    }

    /// Kauffman bracket as `(exponent, coefficient)` pairs.
    fn bracket(&self) -> PyResult<Vec<(i32, i64)>> {
        Ok(invariants::bracket(&self.inner).map_err(err)?.terms().collect())
    }

    fn normalized_polynomial(&self) -> PyResult<Vec<(i32, i64)>> {
        Ok(invariants::normalized_polynomial(&self.inner).map_err(err)?.terms().collect())
    }

    /// L-polynomial as `(a exponent, z exponent, coefficient)` triples.
    fn l_polynomial(&self) -> PyResult<Vec<(i32, i32, i64)>> {
        Ok(invariants::l_polynomial(&self.inner).map_err(err)?.terms().collect())
    }

    /// Moves applied and the final code.
    #[pyo3(signature = (budget=None))]
    fn reduce(&self, budget: Option<usize>) -> PyResult<(Vec<String>, PyGridCode)> {
        let budget = budget.unwrap_or_else(|| moves::default_budget(&self.inner));
        let log = moves::reduce(&self.inner, budget).map_err(err)?;
        Ok((log.steps.iter().map(|m| m.to_string()).collect(), wrap(log.final_code)))
    }

    /// Number of unlink components, `False` if not an unlink, `None` if unknown.
    fn is_unlink(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        Ok(match moves::is_unlink(&self.inner).map_err(err)? {
            UnlinkStatus::Yes(c) => c.into_pyobject(py)?.into_any().unbind(),
            UnlinkStatus::No => false.into_pyobject(py)?.to_owned().into_any().unbind(),
            UnlinkStatus::Unknown => py.None(),
        })
    }

    fn unlink_distance(&self) -> PyResult<(usize, usize)> {
        enumerate::unlink_distance(&self.inner).map_err(err)
    }

    fn __mul__(&self, other: &PyGridCode) -> PyResult<PyGridCode> {
        algebra::product(&self.inner, &other.inner).map(wrap).map_err(err)
    }

    fn mirror_image(&self) -> PyGridCode {
        wrap(algebra::mirror_image(&self.inner))
    }

    fn four_code(&self) -> PyResult<(usize, usize, u64, u64)> {
        let f = codes::four_code(&self.inner).map_err(err)?;
        Ok((f.p, f.q, f.m, f.n))
    }

    fn minimal_four_code(&self) -> PyResult<(usize, usize, u64, u64)> {
        let f = codes::minimal_four_code(&self.inner).map_err(err)?;
        Ok((f.p, f.q, f.m, f.n))
    }

    fn canonical_representation(&self) -> PyResult<(usize, usize, u64, u64)> {
        let f = algebra::canonical_representation(&self.inner).map_err(err)?;
        Ok((f.p, f.q, f.m, f.n))
    }

    /// Mosaic in its text form.
    fn mosaic(&self) -> PyResult<String> {
        Ok(mosaic::to_mosaic(&self.inner).map_err(err)?.to_string())
    }

    fn svg(&self) -> PyResult<String> {
        render::render_svg(&self.inner).map_err(err)
    }
}

#[pyfunction]
#[pyo3(signature = (p, q, m, n=None))]
fn decode(p: usize, q: usize, m: u64, n: Option<u64>) -> PyResult<PyGridCode> {
    let code = match n {
        Some(n) => FourCode::new(p, q, m, n).and_then(codes::decode_four),
        None => StateCode::new(p, q, m).and_then(codes::decode_state),
    };
    code.map(wrap).map_err(err)
}

/// Number of isometry classes of RG[p,q] codes.
#[pyfunction]
fn isometry_class_count(p: usize, q: usize) -> PyResult<usize> {
    Ok(enumerate::isometry_classes(p, q).map_err(err)?.len())
}

/// L-polynomial of a two-bridge family: `"p"`, `"p2"`, `"3p"` or `"pq"`.
#[pyfunction]
#[pyo3(signature = (kind, p, q=None))]
fn l_family(kind: &str, p: u32, q: Option<u32>) -> PyResult<Vec<(i32, i32, i64)>> {
    let f = match (kind, q) {
        ("p", None) => KnownFamily::P(p),
        ("p2", None) => KnownFamily::P2(p),
        ("3p", None) => KnownFamily::ThreeP(p),
        ("pq", Some(q)) => KnownFamily::PQ(p, q),
        _ => return Err(err(Error::Parse(format!("unknown family {kind:?}")))),
    };
    Ok(invariants::l_family(f).map_err(err)?.terms().collect())
}

/// Code of RG[p,q] with every label equal to `label`.
#[pyfunction]
fn filled(p: usize, q: usize, label: i64) -> PyResult<PyGridCode> {
    let l = EdgeLabel::from_value(label).ok_or_else(|| err(Error::Label(format!("{label}"))))?;
    mirrorknot_core::GridCode::filled(p, q, l).map(wrap).map_err(err)
}

#[pymodule]
fn mirrorknot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGridCode>()?;
    m.add("MirrorKnotError", m.py().get_type::<MirrorKnotError>())?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(isometry_class_count, m)?)?;
    m.add_function(wrap_pyfunction!(l_family, m)?)?;
    m.add_function(wrap_pyfunction!(filled, m)?)?;
    Ok(())
}
