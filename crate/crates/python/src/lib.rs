//! Python bindings: fields, forms, matrices and groups as objects, and the
//! command-line pipelines returning their JSON reports as dicts.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use wildgalois::construct::standard_group as core_standard_group;
use wildgalois::forms::{multiplicity_at_center, orbit_product};
use wildgalois::group::{recognize_structure, DEFAULT_CAP};
use wildgalois::text::{parse_form, parse_point};
use wildgalois::{make_field, parse_field, FieldSpec, HomogeneousForm, Matrix as CoreMatrix, MatrixGroup};

create_exception!(pywildgalois, WildGaloisError, PyException);

fn err(e: wildgalois::Error) -> PyErr {
    WildGaloisError::new_err(format!("{}: {}", e.code(), e))
}

#[pyclass(name = "Field", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Field(FieldSpec);

#[pymethods]
impl Field {
    #[new]
    #[pyo3(signature = (p, k = 1))]
    fn new(p: u64, k: u32) -> PyResult<Self> {
        make_field(p, k).map(Field).map_err(err)
    }

    /// Parses `p=3,k=2`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_field(text).map(Field).map_err(err)
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.p()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k()
    }

    #[getter]
    fn size(&self) -> u32 {
        self.0.size()
    }

    fn extension(&self, s: u32) -> PyResult<Field> {
        self.0.extension(s).map(Field).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Field({})", self.0)
    }
}

#[pyclass(name = "Matrix", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Matrix(CoreMatrix);

#[pymethods]
impl Matrix {
    /// Rows separated by `;`, entries by `,`.
    #[new]
    fn new(text: &str, field: &Field) -> PyResult<Self> {
        CoreMatrix::parse(text, &field.0).map(Matrix).map_err(err)
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn __mul__(&self, other: &Matrix) -> PyResult<Matrix> {
        if self.0.field() != other.0.field() || self.0.size() != other.0.size() {
            return Err(err(wildgalois::Error::SizeMismatch));
        }
        Ok(Matrix(self.0.mul(&other.0)))
    }

    fn inverse(&self) -> PyResult<Matrix> {
        self.0.inverse().map(Matrix).ok_or_else(|| err(wildgalois::Error::SingularMatrix))
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Matrix('{}', {})", self.0, self.0.field())
    }
}

#[pyclass(name = "Form", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Form(HomogeneousForm);

#[pymethods]
impl Form {
    /// Polynomial text in `X0, X1, ...`; `nvars` defaults to the highest
    /// variable used.
    #[new]
    #[pyo3(signature = (text, field, nvars = None))]
    fn new(text: &str, field: &Field, nvars: Option<usize>) -> PyResult<Self> {
        parse_form(text, &field.0, nvars).map(Form).map_err(err)
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.0.degree()
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.0.nvars()
    }

    #[getter]
    fn field(&self) -> Field {
        Field(self.0.field().clone())
    }

    /// `F(AX)`.
    fn act(&self, a: &Matrix) -> PyResult<Form> {
        self.0.act(&a.0).map(Form).map_err(err)
    }

    /// Value at a point given as `1,0,t`.
    fn eval(&self, point: &str) -> PyResult<String> {
        let pt = parse_point(point, self.0.field()).map_err(err)?;
        if pt.len() != self.0.nvars() {
            return Err(err(wildgalois::Error::SizeMismatch));
        }
        Ok(self.0.field().format(self.0.eval(&pt)))
    }

    /// Multiplicity at `[1:0:...:0]`.
    fn multiplicity_at_origin(&self) -> PyResult<u32> {
        multiplicity_at_center(&self.0).map_err(err)
    }

    fn __add__(&self, other: &Form) -> PyResult<Form> {
        if self.0.field() != other.0.field() || self.0.nvars() != other.0.nvars() || self.0.degree() != other.0.degree() {
            return Err(err(wildgalois::Error::SizeMismatch));
        }
        Ok(Form(self.0.add(&other.0)))
    }

    fn __mul__(&self, other: &Form) -> PyResult<Form> {
        if self.0.field() != other.0.field() || self.0.nvars() != other.0.nvars() {
            return Err(err(wildgalois::Error::SizeMismatch));
        }
        Ok(Form(self.0.mul(&other.0)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Form('{}', {})", self.0, self.0.field())
    }
}

#[pyclass(name = "Group", frozen)]
struct Group(MatrixGroup);

#[pymethods]
impl Group {
    #[new]
    #[pyo3(signature = (generators, cap = DEFAULT_CAP))]
    fn new(generators: Vec<Matrix>, cap: usize) -> PyResult<Self> {
        let first = generators.first().ok_or_else(|| err(wildgalois::Error::ParameterViolation("no generators".into())))?;
        let gens: Vec<CoreMatrix> = generators.iter().map(|g| g.0.clone()).collect();
        MatrixGroup::generate(first.0.field(), first.0.size(), &gens, cap).map(Group).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn is_ut_star(&self) -> bool {
        self.0.is_ut_star()
    }

    fn contains(&self, a: &Matrix) -> bool {
        self.0.contains(&a.0)
    }

    fn generators(&self) -> Vec<Matrix> {
        self.0.minimal_generators().into_iter().map(Matrix).collect()
    }

    /// `(u, l)` with `|G| = p^u * l`.
    fn structure(&self) -> PyResult<(u32, u64)> {
        let s = recognize_structure(&self.0).map_err(err)?;
        Ok((s.u, s.l))
    }

    /// `prod_{g in G} g^* X0`.
    fn orbit_product(&self) -> PyResult<Form> {
        orbit_product(&self.0).map(Form).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn __repr__(&self) -> String {
        format!("Group(order={}, field={})", self.0.order(), self.0.field())
    }
}

#[pyfunction]
#[pyo3(signature = (p, u, l, n))]
fn standard_group(p: u64, u: u32, l: u64, n: usize) -> PyResult<Group> {
    core_standard_group(p, u, l, n).map(Group).map_err(err)
}

/// Runs a CLI invocation and returns its report as a dict.
fn run_cli<'py>(py: Python<'py>, args: Vec<String>) -> PyResult<Bound<'py, PyDict>> {
    let argv = std::iter::once("wildgalois".to_string()).chain(args);
    let outcome = py.detach(|| wildgalois::cli::run(argv, &mut std::io::empty()));
    let value: serde_json::Value = serde_json::from_str(&outcome.json).map_err(|e| WildGaloisError::new_err(e.to_string()))?;
    if outcome.exit_code != 0 {
        let code = value["error"]["code"].as_str().unwrap_or("Error");
        let message = value["error"]["message"].as_str().unwrap_or("");
        return Err(WildGaloisError::new_err(format!("{code}: {message}")));
    }
    let json = py.import("json")?;
    json.call_method1("loads", (outcome.json,))?.cast_into::<PyDict>().map_err(Into::into)
}

fn common(seed: u64, s_max: u32) -> Vec<String> {
    vec!["--seed".into(), seed.to_string(), "--smax".into(), s_max.to_string()]
}

/// Synthesizes a hypersurface with a wild Galois point of shape `(u, l)`.
#[pyfunction]
#[pyo3(signature = (p, u, l, n, m = 0, seed = 0, s_max = 4))]
#[allow(clippy::too_many_arguments)]
fn construct<'py>(py: Python<'py>, p: u64, u: u32, l: u64, n: usize, m: u32, seed: u64, s_max: u32) -> PyResult<Bound<'py, PyDict>> {
    let mut args: Vec<String> = ["construct", "--p", &p.to_string(), "--u", &u.to_string(), "--l", &l.to_string()]
        .iter()
        .map(|s| s.to_string())
        .collect();
    args.extend(["--n".into(), n.to_string(), "--m".into(), m.to_string()]);
    args.extend(common(seed, s_max));
    run_cli(py, args)
}

fn form_args(command: &str, form: &Form, point: Option<&str>) -> Vec<String> {
    let mut args = vec![command.to_string(), "--field".into(), form.0.field().to_string(), "--form".into(), form.0.to_string()];
    if let Some(pt) = point {
        args.extend(["--point".into(), pt.to_string()]);
    }
    args
}

/// Brute-force classification of a point (default `[1:0:...:0]`).
#[pyfunction]
#[pyo3(signature = (form, point = None, seed = 0, s_max = 4))]
fn verify<'py>(py: Python<'py>, form: &Form, point: Option<&str>, seed: u64, s_max: u32) -> PyResult<Bound<'py, PyDict>> {
    let mut args = form_args("verify", form, point);
    args.extend(common(seed, s_max));
    run_cli(py, args)
}

/// Wild-ramification report for a point.
#[pyfunction]
#[pyo3(signature = (form, point = None, normal = false, seed = 0, s_max = 4))]
fn ramify<'py>(py: Python<'py>, form: &Form, point: Option<&str>, normal: bool, seed: u64, s_max: u32) -> PyResult<Bound<'py, PyDict>> {
    let mut args = form_args("ramify", form, point);
    if normal {
        args.push("--normal".into());
    }
    args.extend(common(seed, s_max));
    run_cli(py, args)
}

/// A named test hypersurface; keyword arguments mirror the CLI flags.
#[pyfunction]
#[pyo3(signature = (name, field = None, a = None, p = None, e = None, h = None))]
fn fixture(py: Python<'_>, name: &str, field: Option<&Field>, a: Option<&str>, p: Option<u64>, e: Option<u32>, h: Option<&str>) -> PyResult<Form> {
    let mut args = vec!["fixture".to_string(), name.to_string()];
    if let Some(f) = field {
        args.extend(["--field".into(), f.0.to_string()]);
    }
    for (flag, value) in [("--a", a.map(str::to_string)), ("--p", p.map(|x| x.to_string())), ("--e", e.map(|x| x.to_string())), ("--h", h.map(str::to_string))] {
        if let Some(v) = value {
            args.extend([flag.to_string(), v]);
        }
    }
    let doc = run_cli(py, args)?;
    let field_text: String = doc.get_item("field")?.expect("field key").extract()?;
    let form_text: String = doc.get_item("form")?.expect("form key").extract()?;
    let f = parse_field(&field_text).map_err(err)?;
    parse_form(&form_text, &f, Some(3)).map(Form).map_err(err)
}

#[pymodule]
fn pywildgalois(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Field>()?;
    m.add_class::<Matrix>()?;
    m.add_class::<Form>()?;
    m.add_class::<Group>()?;
    m.add_function(wrap_pyfunction!(standard_group, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(ramify, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add("WildGaloisError", m.py().get_type::<WildGaloisError>())?;
    Ok(())
}
