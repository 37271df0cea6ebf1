use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use linksgould::braid::BraidWord;
use linksgould::bratteli::{catalan, dim_lg};
use linksgould::{cli, rmatrix};

fn braid(text: &str, strands: usize) -> PyResult<BraidWord> {
    BraidWord::parse(text, strands).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// LG invariant of the closure of `braid`, as a Laurent polynomial in t0, t1.
#[pyfunction]
fn lg_invariant(braid_text: &str, strands: usize) -> PyResult<String> {
    if strands > rmatrix::MAX_STRANDS {
        return Err(PyValueError::new_err(format!("at most {} strands", rmatrix::MAX_STRANDS)));
    }
    let w = braid(braid_text, strands)?;
    rmatrix::lg_invariant(&w).map(|l| l.to_string()).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pyfunction]
fn components(braid_text: &str, strands: usize) -> PyResult<usize> {
    Ok(braid(braid_text, strands)?.closure_components())
}

/// (n, dim LG_n, C_{n-1}^2 (2n-1)) for n = 1..=max, as decimal strings.
#[pyfunction]
fn dims(max: u32) -> Vec<(u32, String, String)> {
    (1..=max)
        .map(|n| {
            let c = catalan(n - 1);
            (n, dim_lg(n).to_string(), (&c * &c * (2 * n - 1)).to_string())
        })
        .collect()
}

/// Runs the `lg` command line in-process; returns (exit code, stdout, stderr).
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let out = cli::run(std::iter::once("lg".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn linksgould_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(lg_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(components, m)?)?;
    m.add_function(wrap_pyfunction!(dims, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
