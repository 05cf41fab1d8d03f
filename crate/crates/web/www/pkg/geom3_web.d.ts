/* tslint:disable */
/* eslint-disable */

/**
 * Trace trichotomy and fixed set of `z ↦ (az + b)/(cz + d)`.
 */
export function classify_mobius(a: number, b: number, c: number, d: number): string;

/**
 * Iso(H_ℝ/L) for a preset (`HZ`, `Gp:p`, `hex:p`), optionally with the point group adjoined.
 */
export function nil_iso(preset: string, with_point_group: boolean): string;

/**
 * Iso(Sol/Γ_{Aⁿ}) for a row-major `a,b,c,d`.
 */
export function sol_iso(matrix: string, power: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly classify_mobius: (a: number, b: number, c: number, d: number) => [number, number];
    readonly nil_iso: (a: number, b: number, c: number) => [number, number];
    readonly sol_iso: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
