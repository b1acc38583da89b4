//! Python bindings for the socle engine: load a presentation, compute
//! invariants, homology lengths, witnesses and certificates. Reports come
//! back as JSON strings so the Python side stays schema-driven.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use socle::aci;
use socle::error::Error;
use socle::extend;
use socle::gb::Length;
use socle::koszul::{self, KoszulComplex};
use socle::parse::{parse_poly, print_poly};
use socle::presentation::PresentationFile;
use socle::report;
use socle::ring::{ParameterSequence, RingPresentation};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Internal(msg) => PyRuntimeError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// A presented graded quotient ring with an optional parameter sequence.
#[pyclass(name = "Presentation")]
struct PyPresentation {
    file: PresentationFile,
    presentation: RingPresentation,
    sop: Option<ParameterSequence>,
    witness: Option<socle::poly::Polynomial>,
}

impl PyPresentation {
    fn parse_elems(&self, elems: Vec<String>) -> PyResult<Vec<socle::poly::Polynomial>> {
        elems
            .iter()
            .map(|s| parse_poly(self.presentation.ring(), s).map_err(to_py_err))
            .collect()
    }

    fn require_sop(&self) -> PyResult<&ParameterSequence> {
        match &self.sop {
            Some(s) if s.is_verified() => Ok(s),
            Some(_) => Err(PyValueError::new_err(
                "the sop entry did not verify as a system of parameters",
            )),
            None => Err(PyValueError::new_err("presentation has no sop entry")),
        }
    }
}

#[pymethods]
impl PyPresentation {
    /// Parse the key = value presentation format.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let file = PresentationFile::parse(text).map_err(to_py_err)?;
        let (presentation, sop, witness) = file.build().map_err(to_py_err)?;
        Ok(PyPresentation {
            file,
            presentation,
            sop,
            witness,
        })
    }

    fn dim(&self) -> usize {
        self.presentation.krull_dim()
    }

    fn embdim(&self) -> usize {
        self.presentation.embdim()
    }

    fn mu(&self) -> PyResult<usize> {
        self.presentation
            .minimal_generator_count()
            .map_err(to_py_err)
    }

    fn depth(&self) -> PyResult<usize> {
        aci::depth(&self.presentation).map_err(to_py_err)
    }

    fn is_aci(&self) -> PyResult<bool> {
        self.presentation.is_aci().map_err(to_py_err)
    }

    fn is_sop(&self, elems: Vec<String>) -> PyResult<bool> {
        let polys = self.parse_elems(elems)?;
        self.presentation.is_sop(&polys).map_err(to_py_err)
    }

    /// Full invariant report as a JSON string.
    fn analyze(&self) -> PyResult<String> {
        let started = std::time::Instant::now();
        let report = aci::analyze(&self.presentation, self.sop.as_ref()).map_err(to_py_err)?;
        let value = report::invariant_report_value(
            self.presentation.ring(),
            &self.file,
            &report,
            started.elapsed().as_millis(),
        );
        Ok(value.to_string())
    }

    /// (nonzero?, length or None) per homology index of the sequence.
    fn koszul_homology(&self, seq: Vec<String>) -> PyResult<Vec<(bool, Option<u64>)>> {
        let elems = self.parse_elems(seq)?;
        let complex = KoszulComplex::build(&self.presentation, &elems).map_err(to_py_err)?;
        let mut out = Vec::new();
        for i in 0..=elems.len() {
            let h = koszul::homology(&self.presentation, &complex, i).map_err(to_py_err)?;
            let len = koszul::homology_length(&self.presentation, &h).map_err(to_py_err)?;
            out.push((
                !h.is_zero(),
                match len {
                    Length::Finite(n) => Some(n),
                    Length::Infinite => None,
                },
            ));
        }
        Ok(out)
    }

    /// Socle witnesses of the parameter ideal, printed canonically.
    fn socle_witnesses(&self) -> PyResult<Vec<String>> {
        let sop = self.require_sop()?;
        let ws = self
            .presentation
            .socle_witnesses(sop)
            .map_err(to_py_err)?;
        Ok(ws
            .iter()
            .map(|z| print_poly(self.presentation.ring(), z))
            .collect())
    }

    /// Socle annihilator verdict as a JSON string.
    fn question1(&self) -> PyResult<String> {
        let sop = self.require_sop()?;
        let q = aci::question1_verdict(&self.presentation, sop).map_err(to_py_err)?;
        let ring = self.presentation.ring();
        Ok(serde_json::json!({
            "witnesses": q.witnesses.iter().map(|z| print_poly(ring, z)).collect::<Vec<_>>(),
            "failures": q.failures.len(),
            "ok": q.ok,
        })
        .to_string())
    }

    /// Acyclicity certificate for a witness (default: the file's z entry).
    #[pyo3(signature = (z=None))]
    fn residual(&self, z: Option<String>) -> PyResult<String> {
        let started = std::time::Instant::now();
        let sop = self.require_sop()?;
        let witness = match z {
            Some(s) => parse_poly(self.presentation.ring(), &s).map_err(to_py_err)?,
            None => self
                .witness
                .clone()
                .ok_or_else(|| PyValueError::new_err("no witness given and no z entry"))?,
        };
        let cert =
            aci::acyclicity_certificate(&self.presentation, sop, &witness).map_err(to_py_err)?;
        Ok(report::residual_value(
            self.presentation.ring(),
            &self.file,
            &cert,
            started.elapsed().as_millis(),
        )
        .to_string())
    }

    /// Hilbert data (numerator coefficients, dimension, multiplicity).
    fn hilbert(&self) -> PyResult<(Vec<i64>, usize, i64)> {
        let h = self.presentation.hilbert().map_err(to_py_err)?;
        let numer = h
            .numerator
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| PyRuntimeError::new_err("coefficient overflow")))
            .collect::<PyResult<Vec<_>>>()?;
        let mult = i64::try_from(&h.multiplicity)
            .map_err(|_| PyRuntimeError::new_err("multiplicity overflow"))?;
        Ok((numer, h.dimension, mult))
    }

    /// Adjoin square roots of the elements; returns the new presentation
    /// text and whether the roots form part of a minimal basis.
    fn adjoin_sqrt(&self, elems: Vec<String>) -> PyResult<(String, bool)> {
        let polys = self.parse_elems(elems)?;
        let tower = extend::sqrt_tower(&self.presentation, &polys).map_err(to_py_err)?;
        let promoted = tower
            .ring
            .part_of_minimal_basis(&tower.roots)
            .map_err(to_py_err)?;
        let file = PresentationFile::from_presentation(&tower.ring, Some(&tower.roots), None);
        Ok((file.render(), promoted))
    }

    /// Graded oracle rows (degree, dim kernel, dim image, dim homology).
    fn oracle(
        &self,
        seq: Vec<String>,
        i: usize,
        bound: u64,
    ) -> PyResult<Vec<(u64, usize, usize, usize)>> {
        let elems = self.parse_elems(seq)?;
        let rows =
            koszul::graded_oracle(&self.presentation, &elems, i, bound).map_err(to_py_err)?;
        Ok(rows
            .iter()
            .map(|r| (r.degree, r.dim_kernel, r.dim_image, r.dim_homology))
            .collect())
    }

    fn render(&self) -> String {
        self.file.render()
    }
}

/// Normal form of a polynomial modulo the presented ideal.
#[pyfunction]
fn normal_form(presentation: &PyPresentation, poly: &str) -> PyResult<String> {
    let p = parse_poly(presentation.presentation.ring(), poly).map_err(to_py_err)?;
    Ok(print_poly(
        presentation.presentation.ring(),
        &presentation.presentation.nf(&p),
    ))
}

#[pymodule]
fn socle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPresentation>()?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
