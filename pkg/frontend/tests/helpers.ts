import type { CheckApi } from '../src/api.js';
import type { Scheduler } from '../src/debounce.js';
import type { CheckResponse, Verdict, WireAnnotation } from '../src/types.js';

/** Deterministic scheduler driven by explicit time advancement. */
export class FakeScheduler implements Scheduler {
	now = 0;
	private tasks: { id: number; at: number; fn: () => void }[] = [];
	private seq = 1;

	schedule(fn: () => void, ms: number): number {
		const id = this.seq++;
		this.tasks.push({ id, at: this.now + ms, fn });
		return id;
	}

	cancel(id: number): void {
		this.tasks = this.tasks.filter((t) => t.id !== id);
	}

	async advance(ms: number): Promise<void> {
		this.now += ms;
		const due = this.tasks
			.filter((t) => t.at <= this.now)
			.sort((a, b) => a.at - b.at);
		this.tasks = this.tasks.filter((t) => t.at > this.now);
		for (const task of due) task.fn();
		await flushMicrotasks();
	}
}

export function flushMicrotasks(): Promise<void> {
	return new Promise((resolve) => setTimeout(resolve, 0));
}

interface Deferred {
	text: string;
	resolve: (response: CheckResponse) => void;
	reject: (error: Error) => void;
}

/** CheckApi whose responses the test resolves by hand, in any order. */
export class FakeApi implements CheckApi {
	calls: Deferred[] = [];

	check(text: string): Promise<CheckResponse> {
		return new Promise((resolve, reject) => {
			this.calls.push({ text, resolve, reject });
		});
	}

	async resolveCall(index: number, response: CheckResponse): Promise<void> {
		this.calls[index].resolve(response);
		await flushMicrotasks();
	}

	async rejectCall(index: number): Promise<void> {
		this.calls[index].reject(new Error('connection refused'));
		await flushMicrotasks();
	}
}

/** Build a CheckResponse flagging every occurrence of the given surfaces.
 * Test documents are ASCII, so byte offsets equal string indices.
 */
export function responseFor(
	text: string,
	flagged: { surface: string; verdict: Verdict; suggestions?: string[] }[],
): CheckResponse {
	const annotations: WireAnnotation[] = [];
	for (const f of flagged) {
		let at = text.toLowerCase().indexOf(f.surface);
		while (at !== -1) {
			annotations.push({
				start: at,
				end: at + f.surface.length,
				surface: f.surface,
				verdict: f.verdict,
				rules: [],
				suggestions: f.suggestions ?? [],
			});
			at = text.toLowerCase().indexOf(f.surface, at + 1);
		}
	}
	const tokens = text.split(/\s+/).filter(Boolean).length;
	const extra = annotations.filter((a) => a.verdict === 'extra').length;
	const rejected = annotations.filter((a) => a.verdict === 'rejected').length;
	return {
		annotations,
		stats: {
			tokens,
			allowed: tokens - extra - rejected,
			extra,
			rejected,
			coverage: tokens ? (tokens - extra - rejected) / tokens : null,
		},
	};
}
