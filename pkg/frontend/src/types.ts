/** Wire types for the checking service (mirrors the /v1/check response). */

export type Verdict = 'extra' | 'rejected';

export interface WireAnnotation {
	/** Byte offsets into the submitted UTF-8 text. */
	start: number;
	end: number;
	surface: string;
	verdict: Verdict;
	rules: number[];
	suggestions: string[];
}

export interface CheckStats {
	tokens: number;
	allowed: number;
	extra: number;
	rejected: number;
	coverage: number | null;
}

export interface CheckResponse {
	annotations: WireAnnotation[];
	stats: CheckStats;
}

export interface WordListEntry {
	surface: string;
	pos: string[];
}

export interface WordListResponse {
	version: string;
	size: number;
	entries: WordListEntry[];
}

export interface ExpandDerivation {
	root: string;
	rule: number;
	surface: string;
	suffix: string | null;
	irregular: boolean;
}

export interface ExpandResponse {
	word: string;
	derivations: ExpandDerivation[];
}

/** An annotation resolved to UTF-16 indices and verified against the document. */
export interface AppliedAnnotation {
	from: number;
	to: number;
	surface: string;
	verdict: Verdict;
	rules: number[];
	suggestions: string[];
}
