//! Building serialized spectrum tables (the same documents the CLI emits).
//!
//! ```bash
//! cargo run --example export_tables
//! ```

use sphere_spectra::engine::{canonical_base, propagate, OperatorSpec};
use sphere_spectra::tables::{
    build_table, from_spectrum_table, to_csv_bytes, to_json_bytes, TableOperator, TableRequest,
};
use sphere_spectra::weights::{BundleSpec, Family};

fn main() {
    let request = TableRequest {
        bundle: BundleSpec::new(3, 1, Family::Symmetric, None).unwrap(),
        operator: TableOperator::HigherSpin,
        j_max: 1,
        threads: 0,
    };
    let doc = build_table(&request).unwrap();

    println!("CSV rendering:");
    print!("{}", String::from_utf8(to_csv_bytes(&doc)).unwrap());

    println!("\nJSON rendering (schema_version 1):");
    print!("{}", String::from_utf8(to_json_bytes(&doc)).unwrap());

    // Engine-produced spectra serialize into the same document format.
    let bundle = request.bundle;
    let op = OperatorSpec::higher_spin();
    let (base_label, base_value) = canonical_base(&bundle);
    let table = propagate(&bundle, &op, (&base_label, &base_value), 1).unwrap();
    let engine_doc = from_spectrum_table(&table);
    assert_eq!(to_json_bytes(&engine_doc), to_json_bytes(&doc));
    println!("\nengine propagation serializes to the identical document");
}
