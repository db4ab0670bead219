/** Trailing-edge debouncer with an injectable clock so tests can drive time. */

export interface Scheduler {
	schedule(fn: () => void, ms: number): number;
	cancel(id: number): void;
}

export const realScheduler: Scheduler = {
	schedule: (fn, ms) => setTimeout(fn, ms) as unknown as number,
	cancel: (id) => clearTimeout(id as unknown as ReturnType<typeof setTimeout>),
};

export class Debouncer {
	private pending: number | null = null;

	constructor(
		private readonly intervalMs: number,
		private readonly scheduler: Scheduler = realScheduler,
	) {}

	/** Run `fn` once the interval has elapsed since the last call. */
	call(fn: () => void): void {
		if (this.pending !== null) this.scheduler.cancel(this.pending);
		this.pending = this.scheduler.schedule(() => {
			this.pending = null;
			fn();
		}, this.intervalMs);
	}

	cancel(): void {
		if (this.pending !== null) {
			this.scheduler.cancel(this.pending);
			this.pending = null;
		}
	}

	get active(): boolean {
		return this.pending !== null;
	}
}
