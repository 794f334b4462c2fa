/* tslint:disable */
/* eslint-disable */

export class Playground {
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Classification and structure of the graph as JSON.
     */
    analyze(): string;
    /**
     * Plays vertex `v`. Returns false, changing nothing, when `v` is off.
     */
    click(v: number): boolean;
    config(): string;
    /**
     * Edges as a flat list `[u0, v0, u1, v1, ...]`.
     */
    edges(): Uint32Array;
    /**
     * `kind` is one of path, cycle, complete, star, grid, tree; `params`
     * is a comma-separated list.
     */
    static generate(kind: string, params: string, seed?: number | null): Playground;
    /**
     * Next move of a shortest sequence to the orbit's minimum weight, or
     * none when already there.
     */
    hint(): number | undefined;
    history(): Uint32Array;
    is_on(v: number): boolean;
    /**
     * Vertex positions `[x0, y0, x1, y1, ...]` inside a `width` by `height`
     * box. Grids use their coordinates; other graphs get a seeded spring
     * layout, so the picture is the same on every load.
     */
    layout(width: number, height: number): Float64Array;
    /**
     * Parses the graph file format or its JSON form.
     */
    constructor(text: string);
    /**
     * `ZERO`, `Q0` or `Q1`, or none when the classification does not apply.
     */
    orbit_class(): string | undefined;
    order(): number;
    /**
     * Starts a new game from a bitstring or on-vertex list.
     */
    set_config(text: string): void;
    target_weight(): number;
    /**
     * Takes back the last move. Moves are involutions, so this replays it.
     */
    undo(): boolean;
    weight(): number;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_playground_free: (a: number, b: number) => void;
    readonly playground_analyze: (a: number) => [number, number];
    readonly playground_click: (a: number, b: number) => number;
    readonly playground_config: (a: number) => [number, number];
    readonly playground_edges: (a: number) => [number, number];
    readonly playground_generate: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly playground_hint: (a: number) => [number, number, number];
    readonly playground_history: (a: number) => [number, number];
    readonly playground_is_on: (a: number, b: number) => number;
    readonly playground_layout: (a: number, b: number, c: number) => [number, number];
    readonly playground_new: (a: number, b: number) => [number, number, number];
    readonly playground_orbit_class: (a: number) => [number, number];
    readonly playground_order: (a: number) => number;
    readonly playground_set_config: (a: number, b: number, c: number) => [number, number];
    readonly playground_target_weight: (a: number) => [number, number, number];
    readonly playground_undo: (a: number) => number;
    readonly playground_weight: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
