import type { EditorController, EditorState } from './controller.js';
import { annotationAt, segment } from './highlight.js';
import type { AppliedAnnotation } from './types.js';

/** Wire the controller to the page: a textarea over a highlight backdrop,
 * a stats panel, an offline banner, and a suggestion popover.
 */
export function mountEditor(root: HTMLElement, controller: EditorController): void {
	root.innerHTML = `
		<div class="banner" id="banner" hidden>service unreachable - highlights may be stale</div>
		<div class="editor">
			<div class="backdrop" id="backdrop"></div>
			<textarea id="input" spellcheck="false"
				placeholder="write with the ten hundred most used words..."></textarea>
		</div>
		<div class="stats" id="stats"></div>
		<div class="popover" id="popover" hidden></div>
	`;
	const input = root.querySelector<HTMLTextAreaElement>('#input')!;
	const backdrop = root.querySelector<HTMLDivElement>('#backdrop')!;
	const banner = root.querySelector<HTMLDivElement>('#banner')!;
	const stats = root.querySelector<HTMLDivElement>('#stats')!;
	const popover = root.querySelector<HTMLDivElement>('#popover')!;

	input.addEventListener('input', () => {
		hidePopover();
		controller.setDocument(input.value);
	});
	input.addEventListener('scroll', () => {
		backdrop.scrollTop = input.scrollTop;
		backdrop.scrollLeft = input.scrollLeft;
	});
	input.addEventListener('click', () => {
		const state = controller.getState();
		const hit = annotationAt(state.annotations, input.selectionStart);
		if (hit) showPopover(hit);
		else hidePopover();
	});

	function showPopover(annotation: AppliedAnnotation): void {
		popover.innerHTML = '';
		const title = document.createElement('div');
		title.className = 'popover-title';
		title.textContent = `${annotation.surface} (${annotation.verdict})`;
		popover.appendChild(title);
		if (annotation.suggestions.length === 0) {
			const none = document.createElement('div');
			none.className = 'popover-empty';
			none.textContent = 'no suggestion';
			popover.appendChild(none);
		}
		for (const suggestion of annotation.suggestions) {
			const button = document.createElement('button');
			button.textContent = suggestion;
			button.addEventListener('click', () => {
				controller.applySuggestion(annotation, suggestion);
				input.value = controller.getState().document;
				hidePopover();
			});
			popover.appendChild(button);
		}
		popover.hidden = false;
	}

	function hidePopover(): void {
		popover.hidden = true;
	}

	function render(state: EditorState): void {
		banner.hidden = !state.offline;
		backdrop.classList.toggle('stale', state.stale);
		backdrop.innerHTML = '';
		for (const s of segment(state.document, state.annotations)) {
			if (s.annotation) {
				const mark = document.createElement('mark');
				mark.className = s.annotation.verdict;
				mark.textContent = s.text;
				backdrop.appendChild(mark);
			} else {
				backdrop.appendChild(document.createTextNode(s.text));
			}
		}
		// trailing newline so the backdrop keeps the textarea's height
		backdrop.appendChild(document.createTextNode('\n'));

		if (state.stats) {
			const allowedShare =
				state.stats.coverage === null ? '-' : `${Math.round(state.stats.coverage * 100)}%`;
			stats.textContent =
				`words: ${state.stats.tokens}  allowed: ${allowedShare}  ` +
				`extra: ${state.stats.extra}  rejected: ${state.stats.rejected}` +
				(state.pending ? '  checking...' : '');
		} else {
			stats.textContent = state.pending ? 'checking...' : '';
		}
	}

	controller.onChange(render);
	render(controller.getState());
}
