fn main() {
    std::process::exit(sgrp::cli::main_with_args(std::env::args_os()));
}
