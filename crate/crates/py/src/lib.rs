//! Python bindings: finite *-ring construction, arithmetic on element
//! codes, annihilators, projections, GRP/GLP, classification and the
//! theorem suite. Reports cross the boundary as JSON strings; decode with
//! `json.loads`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use rickart::classify::{classify_named, classify_witness, glp, grp};
use rickart::error::Error;
use rickart::parse::parse_construction;
use rickart::projections::{
    central_projections, enumerate_projections, equivalent, proj_bound, BoundKind, Projection,
};
use rickart::ring::{build_ring, FiniteStarRing, RingElement};
use rickart::theorems::{run_grp_absent, run_suite, SuiteOptions};
use rickart::witness::matrix_grp_scan;

fn to_py(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite ring with involution. Elements are canonical integer codes in
/// the ring's carrier; `coords`/`encode` translate between codes and the
/// construction's coordinates (matrix entries, coefficient vectors, pairs).
#[pyclass]
struct Ring {
    inner: FiniteStarRing,
    name: String,
}

impl Ring {
    fn el(&self, code: u64) -> PyResult<RingElement> {
        self.inner.element(code).map_err(to_py)
    }

    fn projection(&self, code: u64) -> PyResult<Projection> {
        Projection::certify(&self.inner, self.el(code)?).map_err(to_py)
    }
}

#[pymethods]
impl Ring {
    /// Build from a catalog name or a construction expression such as
    /// `"unitify(zmod(3), 3)"`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        if let Some(entry) = rickart::catalog::find(spec) {
            return Ok(Ring {
                inner: entry.build().map_err(to_py)?,
                name: entry.name.to_string(),
            });
        }
        let cons = parse_construction(spec).map_err(to_py)?;
        let name = cons.to_string();
        Ok(Ring {
            inner: build_ring(&cons).map_err(to_py)?,
            name,
        })
    }

    #[getter]
    fn name(&self) -> String {
        self.name.clone()
    }

    #[getter]
    fn construction(&self) -> String {
        self.inner.construction().to_string()
    }

    fn size(&self) -> u64 {
        self.inner.size()
    }

    fn zero(&self) -> u64 {
        self.inner.zero_code()
    }

    fn unity(&self) -> Option<u64> {
        self.inner.unity_code()
    }

    fn is_witness_only(&self) -> bool {
        self.inner.is_witness_only()
    }

    fn elements(&self) -> PyResult<Vec<u64>> {
        self.inner
            .elements()
            .map(|els| els.iter().map(|e| e.code()).collect())
            .map_err(to_py)
    }

    fn add(&self, a: u64, b: u64) -> PyResult<u64> {
        Ok(self.inner.add(self.el(a)?, self.el(b)?).map_err(to_py)?.code())
    }

    fn sub(&self, a: u64, b: u64) -> PyResult<u64> {
        Ok(self.inner.sub(self.el(a)?, self.el(b)?).map_err(to_py)?.code())
    }

    fn mul(&self, a: u64, b: u64) -> PyResult<u64> {
        Ok(self.inner.mul(self.el(a)?, self.el(b)?).map_err(to_py)?.code())
    }

    fn neg(&self, a: u64) -> PyResult<u64> {
        Ok(self.inner.neg(self.el(a)?).map_err(to_py)?.code())
    }

    fn star(&self, a: u64) -> PyResult<u64> {
        Ok(self.inner.star(self.el(a)?).map_err(to_py)?.code())
    }

    fn pow(&self, a: u64, n: u32) -> PyResult<u64> {
        Ok(self.inner.pow(self.el(a)?, n).map_err(to_py)?.code())
    }

    /// Canonical coordinates of a code under this construction.
    fn coords(&self, code: u64) -> PyResult<Vec<u64>> {
        self.inner.coords(self.el(code)?).map_err(to_py)
    }

    /// Code of the element with the given coordinates.
    fn encode(&self, coords: Vec<u64>) -> PyResult<u64> {
        Ok(self
            .inner
            .element_from_coords(&coords)
            .map_err(to_py)?
            .code())
    }

    fn projections(&self) -> PyResult<Vec<u64>> {
        Ok(enumerate_projections(&self.inner)
            .map_err(to_py)?
            .iter()
            .map(|p| p.code())
            .collect())
    }

    fn central_projections(&self) -> PyResult<Vec<u64>> {
        Ok(central_projections(&self.inner)
            .map_err(to_py)?
            .iter()
            .map(|p| p.code())
            .collect())
    }

    /// Generalized right projection of x as `(projection, exponent)`, or
    /// None when no projection certifies.
    fn grp(&self, x: u64) -> PyResult<Option<(u64, u32)>> {
        Ok(grp(&self.inner, self.el(x)?)
            .map_err(to_py)?
            .map(|g| (g.e.code(), g.n)))
    }

    fn glp(&self, x: u64) -> PyResult<Option<(u64, u32)>> {
        Ok(glp(&self.inner, self.el(x)?)
            .map_err(to_py)?
            .map(|g| (g.e.code(), g.n)))
    }

    fn right_annihilator(&self, xs: Vec<u64>) -> PyResult<Vec<u64>> {
        let els: Vec<RingElement> = xs.iter().map(|&c| self.el(c)).collect::<PyResult<_>>()?;
        Ok(rickart::annihilators::right_annihilator(&self.inner, &els)
            .map_err(to_py)?
            .elements)
    }

    fn left_annihilator(&self, xs: Vec<u64>) -> PyResult<Vec<u64>> {
        let els: Vec<RingElement> = xs.iter().map(|&c| self.el(c)).collect::<PyResult<_>>()?;
        Ok(rickart::annihilators::left_annihilator(&self.inner, &els)
            .map_err(to_py)?
            .elements)
    }

    /// The chain r(x), r(x^2), ... and its stabilization exponent.
    fn ann_chain(&self, x: u64) -> PyResult<(Vec<Vec<u64>>, u32)> {
        let res = rickart::annihilators::ann_chain(&self.inner, self.el(x)?).map_err(to_py)?;
        Ok((
            res.chain.into_iter().map(|a| a.elements).collect(),
            res.stabilization_n,
        ))
    }

    /// A witness w with w*w = e and ww* = f, if the projections are
    /// equivalent.
    fn equivalent(&self, e: u64, f: u64) -> PyResult<Option<u64>> {
        Ok(
            equivalent(&self.inner, self.projection(e)?, self.projection(f)?)
                .map_err(to_py)?
                .map(|w| w.w.code()),
        )
    }

    fn proj_leq(&self, e: u64, f: u64) -> PyResult<bool> {
        rickart::projections::proj_leq(&self.inner, self.projection(e)?, self.projection(f)?)
            .map_err(to_py)
    }

    fn meet(&self, e: u64, f: u64) -> PyResult<Option<u64>> {
        Ok(
            proj_bound(&self.inner, self.projection(e)?, self.projection(f)?, BoundKind::Meet)
                .map_err(to_py)?
                .found()
                .map(|p| p.code()),
        )
    }

    fn join(&self, e: u64, f: u64) -> PyResult<Option<u64>> {
        Ok(
            proj_bound(&self.inner, self.projection(e)?, self.projection(f)?, BoundKind::Join)
                .map_err(to_py)?
                .found()
                .map(|p| p.code()),
        )
    }

    /// Full classification report as JSON. For witness-only rings pass the
    /// witness element code.
    #[pyo3(signature = (witness=None))]
    fn classify_json(&self, witness: Option<u64>) -> PyResult<String> {
        let report = if self.inner.is_witness_only() {
            let w = witness.ok_or_else(|| {
                PyValueError::new_err("ring is witness-only: pass witness=<element code>")
            })?;
            classify_witness(&self.inner, self.name.clone(), &[self.el(w)?]).map_err(to_py)?
        } else {
            classify_named(&self.inner, self.name.clone()).map_err(to_py)?
        };
        serde_json::to_string_pretty(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Theorem-suite ledger as JSON; optional list of check ids.
    #[pyo3(signature = (checks=None, witness=None))]
    fn prove_json(&self, checks: Option<Vec<String>>, witness: Option<u64>) -> PyResult<String> {
        let mut ledger = run_suite(
            &self.inner,
            checks.as_deref(),
            &SuiteOptions::default(),
        )
        .map_err(to_py)?;
        if let Some(w) = witness {
            let el = self.el(w)?;
            for c in ledger.iter_mut() {
                if c.id == "grp-absent" {
                    *c = run_grp_absent(&self.inner, el).map_err(to_py)?;
                }
            }
        }
        serde_json::to_string_pretty(&ledger).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// GRP search for one element of a matrix ring of any size, via the
    /// star-fixed candidate scan.
    fn witness_grp_scan(&self, x: u64) -> PyResult<Option<(u64, u32)>> {
        Ok(matrix_grp_scan(&self.inner, self.el(x)?)
            .map_err(to_py)?
            .result
            .map(|g| (g.e.code(), g.n)))
    }

    /// DOT source of the projection Hasse diagram.
    fn hasse_dot(&self) -> PyResult<String> {
        rickart::hasse::hasse_dot(&self.inner).map_err(to_py)
    }

    fn center(&self) -> PyResult<Ring> {
        let inner = self.inner.center().map_err(to_py)?;
        let name = inner.construction().to_string();
        Ok(Ring { inner, name })
    }

    fn corner(&self, e: u64) -> PyResult<Ring> {
        let inner = self.inner.corner(self.el(e)?).map_err(to_py)?;
        let name = inner.construction().to_string();
        Ok(Ring { inner, name })
    }

    fn commutant(&self, xs: Vec<u64>) -> PyResult<Ring> {
        let els: Vec<RingElement> = xs.iter().map(|&c| self.el(c)).collect::<PyResult<_>>()?;
        let inner = self.inner.commutant(&els).map_err(to_py)?;
        let name = inner.construction().to_string();
        Ok(Ring { inner, name })
    }

    fn unitify(&self, p: u64) -> PyResult<Ring> {
        let inner = self.inner.unitify(p).map_err(to_py)?;
        let name = inner.construction().to_string();
        Ok(Ring { inner, name })
    }

    fn __repr__(&self) -> String {
        format!(
            "Ring(name='{}', construction='{}', size={})",
            self.name,
            self.inner.construction(),
            self.inner.size()
        )
    }

    fn __len__(&self) -> usize {
        self.inner.size() as usize
    }
}

/// Names of the built-in example rings, in catalog order.
#[pyfunction]
fn catalog_names() -> Vec<String> {
    rickart::catalog::entries()
        .iter()
        .map(|e| e.name.to_string())
        .collect()
}

/// (name, summary, witness_mode) for every catalog entry.
#[pyfunction]
fn catalog() -> Vec<(String, String, bool)> {
    rickart::catalog::entries()
        .iter()
        .map(|e| (e.name.to_string(), e.summary.to_string(), e.witness_mode))
        .collect()
}

/// Ids of the theorem checks accepted by `Ring.prove_json`.
#[pyfunction]
fn check_ids() -> Vec<String> {
    rickart::theorems::check_ids()
        .into_iter()
        .map(str::to_string)
        .collect()
}

#[pymodule]
fn rickart_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    Ok(())
}
