import type { CheckApi } from './api.js';
import { Debouncer, realScheduler, type Scheduler } from './debounce.js';
import { ByteOffsetMap } from './offsets.js';
import type { AppliedAnnotation, CheckStats, WireAnnotation } from './types.js';

export interface EditorState {
	document: string;
	/** Highlights from the most recently completed check of the current or
	 * an older revision; never from a newer ("phantom") one. */
	annotations: AppliedAnnotation[];
	pending: boolean;
	/** True when the shown highlights come from an older revision. */
	stale: boolean;
	/** True when the last check attempt failed (service unreachable). */
	offline: boolean;
	/** The service's stats object, verbatim; null before the first check. */
	stats: CheckStats | null;
}

export type Listener = (state: EditorState) => void;

/** Orchestrates live checking: debounced requests, a monotonic revision
 * counter for staleness, at most one request in flight, and offset-verified
 * annotation application.
 */
export class EditorController {
	private document = '';
	private revision = 0;          // bumps on every edit
	private checkedRevision = -1;  // revision of the applied annotations
	private inFlight: number | null = null; // revision of the pending request
	private queued = false;
	private annotations: AppliedAnnotation[] = [];
	private stats: CheckStats | null = null;
	private offline = false;
	private listeners: Listener[] = [];
	private debouncer: Debouncer;

	constructor(
		private readonly api: CheckApi,
		debounceMs = 300,
		scheduler: Scheduler = realScheduler,
	) {
		this.debouncer = new Debouncer(debounceMs, scheduler);
	}

	onChange(listener: Listener): void {
		this.listeners.push(listener);
	}

	getState(): EditorState {
		return {
			document: this.document,
			annotations: this.annotations,
			pending: this.inFlight !== null || this.debouncer.active,
			stale: this.checkedRevision !== this.revision,
			offline: this.offline,
			stats: this.stats,
		};
	}

	/** Replace the document (an edit); schedules a debounced check. */
	setDocument(text: string): void {
		if (text === this.document) return;
		this.document = text;
		this.revision += 1;
		// keep only highlights whose ranges still spell their surface
		this.annotations = this.annotations.filter((a) =>
			sliceMatches(this.document.slice(a.from, a.to), a.surface),
		);
		if (text === '') {
			// nothing to check: clear immediately rather than round-tripping
			this.annotations = [];
			this.stats = { tokens: 0, allowed: 0, extra: 0, rejected: 0, coverage: null };
			this.checkedRevision = this.revision;
			this.debouncer.cancel();
			this.notify();
			return;
		}
		this.debouncer.call(() => this.fire());
		this.notify();
	}

	/** Replace an annotated range with a suggestion and re-check. */
	applySuggestion(annotation: AppliedAnnotation, suggestion: string): void {
		const current = this.document.slice(annotation.from, annotation.to);
		if (!sliceMatches(current, annotation.surface)) return; // stale
		const next =
			this.document.slice(0, annotation.from) +
			suggestion +
			this.document.slice(annotation.to);
		this.setDocument(next);
	}

	/** Force an immediate check (bypasses the debounce interval). */
	checkNow(): void {
		this.debouncer.cancel();
		this.fire();
	}

	private fire(): void {
		if (this.inFlight !== null) {
			this.queued = true; // one request at a time; run again on settle
			return;
		}
		const revision = this.revision;
		const submitted = this.document;
		this.inFlight = revision;
		this.notify();
		this.api.check(submitted).then(
			(response) => this.settle(revision, submitted, response, null),
			(error) => this.settle(revision, submitted, null, error),
		);
	}

	private settle(
		revision: number,
		submitted: string,
		response: import('./types.js').CheckResponse | null,
		error: unknown,
	): void {
		this.inFlight = null;
		if (response !== null && revision === this.revision) {
			this.offline = false;
			this.annotations = applyAnnotations(submitted, response.annotations);
			this.stats = response.stats;
			this.checkedRevision = revision;
		} else if (response !== null && revision < this.revision) {
			// stale response: discard, but the newest revision still needs a
			// check if none is scheduled
			this.queued = this.queued || !this.debouncer.active;
		} else if (error !== null) {
			this.offline = true; // banner; existing highlights stay, marked stale
		}
		if (this.queued) {
			this.queued = false;
			this.fire();
			return;
		}
		this.notify();
	}

	private notify(): void {
		const state = this.getState();
		for (const listener of this.listeners) listener(state);
	}
}

/** True when a document slice still corresponds to a flagged surface.
 * The surface is normalized (lowercased, de-hyphenated, genitive-stripped),
 * so compare against the slice's bare letters.
 */
export function sliceMatches(slice: string, surface: string): boolean {
	return slice.toLowerCase().replace(/[^a-z]/g, '').includes(surface);
}

/** Resolve wire annotations (byte offsets) against the submitted text.
 * Anything that does not land on code-point boundaries or no longer spells
 * its surface is dropped rather than painted wrong.
 */
export function applyAnnotations(
	text: string,
	wire: WireAnnotation[],
): AppliedAnnotation[] {
	const map = new ByteOffsetMap(text);
	const out: AppliedAnnotation[] = [];
	for (const a of wire) {
		const from = map.utf16Index(a.start);
		const to = map.utf16Index(a.end);
		if (from === null || to === null || from >= to) continue;
		if (!sliceMatches(text.slice(from, to), a.surface)) continue;
		out.push({
			from,
			to,
			surface: a.surface,
			verdict: a.verdict,
			rules: a.rules,
			suggestions: a.suggestions,
		});
	}
	out.sort((x, y) => x.from - y.from || x.to - y.to);
	return out;
}
