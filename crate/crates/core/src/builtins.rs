//! Named fronts available from the CLI.

use crate::diagram::FrontDiagram;
use crate::error::{Error, Result};

/// `(name, source)` pairs. Each carries one base point on the upper branch
/// of its first left cusp, which is where satellites are spliced.
pub const BUILTINS: &[(&str, &str)] = &[
    ("unknot", "L1; B1 *; R1"),
    ("unknot-stab", "L1; L2; B1 *; R1; R1"),
    ("trefoil-rh", "L1; L3; B1 *; X2; X2; X2; R1; R1"),
];

pub fn builtin(name: &str) -> Option<FrontDiagram> {
    BUILTINS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| FrontDiagram::parse(src).expect("built-in fronts are valid"))
}

pub fn unknot() -> FrontDiagram {
    builtin("unknot").unwrap()
}

pub fn unknot_stab() -> FrontDiagram {
    builtin("unknot-stab").unwrap()
}

pub fn trefoil() -> FrontDiagram {
    builtin("trefoil-rh").unwrap()
}

/// Resolves a front argument: a built-in name, a path to a `.front` file, or
/// inline front text.
pub fn resolve_front(arg: &str) -> Result<FrontDiagram> {
    if let Some(f) = builtin(arg) {
        return Ok(f);
    }
    let path = std::path::Path::new(arg);
    if path.extension().map(|e| e == "front").unwrap_or(false) || path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {arg}: {e}")))?;
        return FrontDiagram::parse(&text);
    }
    FrontDiagram::parse(arg)
}
