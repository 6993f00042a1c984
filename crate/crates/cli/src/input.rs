use std::io::{self, BufRead};

use specq_core::{graph6_decode, Graph};

use crate::CliError;

/// Graphs from positional arguments, or from stdin one per line. Blank lines
/// are skipped; decoding stops at the first malformed entry.
pub fn for_each_graph(
    args: &[String],
    mut f: impl FnMut(&str, Graph) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let mut visit = |idx: usize, what: &str, raw: &str| -> Result<(), CliError> {
        let line = raw.trim();
        if line.is_empty() {
            return Ok(());
        }
        let g = graph6_decode(line)
            .map_err(|e| CliError::Data(format!("{what} {}: {e}", idx + 1)))?;
        f(line, g)
    };
    if !args.is_empty() {
        for (i, a) in args.iter().enumerate() {
            visit(i, "argument", a)?;
        }
        return Ok(());
    }
    let stdin = io::stdin();
    for (i, line) in stdin.lock().lines().enumerate() {
        let line = line.map_err(|e| CliError::Data(format!("line {}: {e}", i + 1)))?;
        visit(i, "line", &line)?;
    }
    Ok(())
}

pub fn collect_graphs(args: &[String]) -> Result<Vec<Graph>, CliError> {
    let mut out = Vec::new();
    for_each_graph(args, |_, g| {
        out.push(g);
        Ok(())
    })?;
    Ok(out)
}
