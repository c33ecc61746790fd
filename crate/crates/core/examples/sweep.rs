//! Runs a parameter grid and prints the CSV table, like `genus-calc sweep`.

use genus_calc::cli::sweep::{run_grid, to_csv, SweepGrid};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/grid.json").to_string());
    let grid: SweepGrid = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    grid.check().unwrap();
    let rows = run_grid(&grid).unwrap();
    print!("{}", to_csv(&rows));
}
