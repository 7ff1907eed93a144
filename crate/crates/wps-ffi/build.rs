//! Regenerates include/wps_ffi.h from the extern "C" surface. The
//! generated header is committed so C consumers do not need the Rust
//! toolchain; this script keeps it in sync on every build.

fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();
    let header = std::path::Path::new(&crate_dir).join("include/wps_ffi.h");
    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("WPS_FFI_H".to_string()),
        documentation: true,
        cpp_compat: true,
        enumeration: cbindgen::EnumConfig {
            rename_variants: cbindgen::RenameRule::QualifiedScreamingSnakeCase,
            ..Default::default()
        },
        header: Some(
            "/* C interface for the wps del Pezzo classification toolkit.\n\
             \x20* Generated by cbindgen from crates/wps-ffi; do not edit by hand. */"
                .to_string(),
        ),
        ..Default::default()
    };
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("cbindgen failed")
        .write_to_file(header);
    println!("cargo:rerun-if-changed=src/lib.rs");
}
