/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_playground_free: (a: number, b: number) => void;
export const playground_analyze: (a: number) => [number, number];
export const playground_click: (a: number, b: number) => number;
export const playground_config: (a: number) => [number, number];
export const playground_edges: (a: number) => [number, number];
export const playground_generate: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const playground_hint: (a: number) => [number, number, number];
export const playground_history: (a: number) => [number, number];
export const playground_is_on: (a: number, b: number) => number;
export const playground_layout: (a: number, b: number, c: number) => [number, number];
export const playground_new: (a: number, b: number) => [number, number, number];
export const playground_orbit_class: (a: number) => [number, number];
export const playground_order: (a: number) => number;
export const playground_set_config: (a: number, b: number, c: number) => [number, number];
export const playground_target_weight: (a: number) => [number, number, number];
export const playground_undo: (a: number) => number;
export const playground_weight: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
