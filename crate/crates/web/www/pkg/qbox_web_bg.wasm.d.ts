/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_sweep_free: (a: number, b: number) => void;
export const amplitude_sweep: (a: number, b: number, c: number, d: number) => [number, number, number];
export const beat_period: () => number;
export const density_profile: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const heatmap: (a: number, b: number) => [number, number, number, number];
export const node_trajectory: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const sweep_amplitudes: (a: number) => [number, number];
export const sweep_coefficient: (a: number) => number;
export const sweep_exponent: (a: number) => number;
export const sweep_ratios: (a: number) => [number, number];
export const sweep_rms_log_residual: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
